import json

import pytest
from pydantic import ValidationError

from config.settings import Settings, get_settings
from models.errors import SpecFileError
from models.plot_spec import JitterSpec, LongSlices, PlotSpec, WideSlices
from models.spec_document import load_spec_document


def _write(tmp_path, document) -> str:
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(document))
    return path


class TestSettings:
    def test_defaults(self):
        settings = Settings()
        assert settings.no_parallel is False
        assert settings.default_radius == 10.0
        assert settings.log_level == "WARNING"

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("GLYPHPLOT_NO_PARALLEL", "true")
        monkeypatch.setenv("GLYPHPLOT_LOG_LEVEL", "info")
        monkeypatch.setenv("GLYPHPLOT_MAX_WORKERS", "2")
        settings = get_settings()
        assert settings.no_parallel is True
        assert settings.log_level == "INFO"
        assert settings.max_workers == 2

    def test_invalid_values(self, monkeypatch):
        monkeypatch.setenv("GLYPHPLOT_MAX_WORKERS", "0")
        with pytest.raises(ValidationError):
            Settings()
        monkeypatch.setenv("GLYPHPLOT_MAX_WORKERS", "1")
        monkeypatch.setenv("GLYPHPLOT_LOG_LEVEL", "chatty")
        with pytest.raises(ValidationError):
            Settings()


class TestPlotSpec:
    def test_defaults(self):
        spec = PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["a"]))
        assert spec.pie_radius == 10.0
        assert (spec.width, spec.height) == (600.0, 600.0)
        assert not spec.is_geographic
        assert spec.jitter_amount == 0.0

    def test_slice_kind_discriminator(self):
        spec = PlotSpec.model_validate({
            "x_column": "x", "y_column": "y",
            "slice_spec": {"kind": "long", "category": "c", "value": "v"},
        })
        assert isinstance(spec.slice_spec, LongSlices)
        assert spec.is_long

    @pytest.mark.parametrize(
        "field, value",
        [
            ("pie_radius", 0),
            ("alpha", 1.5),
            ("border_color", "white"),
            ("size_range", (10, 5)),
            ("color_overrides", {"a": "#12345"}),
            ("width", -1),
        ],
    )
    def test_invalid_fields(self, field, value):
        with pytest.raises(ValidationError):
            PlotSpec(x_column="x", y_column="y", slice_spec=WideSlices(columns=["a"]), **{field: value})

    def test_duplicate_slice_columns(self):
        with pytest.raises(ValidationError):
            WideSlices(columns=["a", "a"])

    def test_seed_range(self):
        assert JitterSpec(seed=2**64 - 1).seed == 2**64 - 1
        with pytest.raises(ValidationError):
            JitterSpec(seed=2**64)


class TestSpecDocument:
    def test_wide_document(self, tmp_path):
        spec = load_spec_document(_write(tmp_path, {
            "mapping": {"x": "x", "y": "y", "slices": ["NA", "EU"], "label": "name"},
            "glyph": {"radius": 12, "colors": {"EU": "#000000"}, "alpha": 0.5},
            "jitter": {"seed": 3},
            "labels": {"title": "T"},
            "size": {"width": 800},
        }))
        assert spec.slice_spec == WideSlices(columns=["NA", "EU"])
        assert spec.pie_radius == 12
        assert spec.color_overrides == {"EU": "#000000"}
        assert spec.jitter_amount == 6
        assert spec.labels.title == "T"
        assert (spec.width, spec.height) == (800, 600)
        assert spec.label_column == "name"

    def test_defaults_fill_gaps(self, tmp_path):
        spec = load_spec_document(
            _write(tmp_path, {"mapping": {"x": "x", "y": "y", "slices": ["a"]}}),
            defaults={"width": 300, "height": 200, "pie_radius": 7},
        )
        assert (spec.width, spec.height, spec.pie_radius) == (300, 200, 7)

    def test_map_paths_resolve_against_spec_directory(self, tmp_path):
        spec = load_spec_document(_write(tmp_path, {
            "mapping": {"x": "lon", "y": "lat", "slices_long": {"category": "c", "value": "v", "group_by": ["g"]}},
            "map": {"geojson": "europe.geojson", "projection": "mercator", "center": [1, 2]},
        }))
        assert spec.map_source == tmp_path / "europe.geojson"
        assert spec.projection == "mercator"
        assert spec.projection_center == (1.0, 2.0)
        assert spec.slice_spec == LongSlices(category="c", value="v", group_by=["g"])

    @pytest.mark.parametrize(
        "document",
        [
            {"mapping": {"x": "x", "y": "y"}},
            {"mapping": {"x": "x", "y": "y", "slices": ["a"], "slices_long": {"category": "c", "value": "v"}}},
            {"mapping": {"x": "x", "y": "y", "slices": ["a"]}, "colour": "red"},
            {"mapping": {"x": "x", "y": "y", "slices": ["a"]}, "glyph": {"radius": -3}},
        ],
    )
    def test_invalid_documents(self, tmp_path, document):
        with pytest.raises(SpecFileError):
            load_spec_document(_write(tmp_path, document))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text("{")
        with pytest.raises(SpecFileError) as info:
            load_spec_document(path)
        assert "invalid JSON" in info.value.message

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecFileError):
            load_spec_document(tmp_path / "absent.json")

    def test_bundled_specs_load(self, demo_dir):
        for path in sorted(demo_dir.glob("*_spec.json")):
            assert isinstance(load_spec_document(path), PlotSpec)
