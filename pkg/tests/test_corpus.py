"""
Broken-input corpus: every case must exit 1, name the offending location
and leave no output file behind
"""

import io

import pytest

from cli.runner import EXIT_ERROR, run
from models.run_config import RunConfig

CASES = {
    "negative_slice": ("data.csv", ":17: negative slice value -2 in column 'EU'"),
    "all_zero": ("data.csv", ":2: all slice values are zero"),
    "missing_column": ("data.csv", ": slice column 'EU' not found in data"),
    "unclosed_ring": ("map.geojson", ": feature 'box' ring 0 is not closed"),
    "map_without_projection": ("spec.json", ": a map source is set but no projection is given"),
}


@pytest.mark.parametrize("case", sorted(CASES))
def test_broken_input_is_rejected(tmp_path, corpus_dir, case):
    directory = corpus_dir / case
    blamed, fragment = CASES[case]
    out = tmp_path / "plot.svg"
    stderr = io.StringIO()

    code = run(
        RunConfig(data_path=directory / "data.csv", spec_path=directory / "spec.json", out_path=out),
        stderr=stderr,
    )

    assert code == EXIT_ERROR
    lines = stderr.getvalue().splitlines()
    assert f"error: {directory / blamed}{fragment}" in lines[0]
    assert not out.exists()
    assert list(tmp_path.iterdir()) == []


def test_corpus_is_complete(corpus_dir):
    assert sorted(p.name for p in corpus_dir.iterdir() if p.is_dir()) == sorted(CASES)
