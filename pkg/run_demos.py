#!/usr/bin/env python3
"""
glyphplot demos
Renders every bundled demo scenario into an output directory
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List

from cli.runner import run
from models.run_config import RunConfig
from utils.logging_utils import configure_logging

logger = logging.getLogger(__name__)

DEMO_DIR = Path(__file__).resolve().parent / "data" / "demo"


class DemoRunner:
    """Render the scatter, map and faceted-map demos"""

    def __init__(self, out_dir: Path):
        self.out_dir = Path(out_dir)
        self.results: Dict[str, int] = {}

    def scenarios(self) -> List[RunConfig]:
        games = dict(data_path=DEMO_DIR / "games.csv", spec_path=DEMO_DIR / "games_spec.json")
        births = dict(data_path=DEMO_DIR / "births.csv", spec_path=DEMO_DIR / "births_spec.json")
        faceted = dict(data_path=DEMO_DIR / "births.csv", spec_path=DEMO_DIR / "births_facet_spec.json")

        configs = [
            RunConfig(out_path=self.out_dir / "games.svg", **games),
            RunConfig(
                out_path=self.out_dir / "games_by_genre.svg",
                data_path=DEMO_DIR / "games.csv",
                spec_path=DEMO_DIR / "games_size_spec.json",
            ),
            RunConfig(out_path=self.out_dir / "games_wide.svg", width=1800, height=300, **games),
            RunConfig(out_path=self.out_dir / "games_tall.svg", width=300, height=1800, **games),
        ]
        for projection in ("equirectangular", "mercator", "lambert_azimuthal_equal_area"):
            configs.append(
                RunConfig(out_path=self.out_dir / f"births_{projection}.svg", projection=projection, **births)
            )
        configs.append(RunConfig(out_path=self.out_dir / "births_by_year.svg", **faceted))
        return configs

    def run_all(self) -> bool:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        for config in self.scenarios():
            code = run(config)
            self.results[config.out_path.name] = code
            if code == 0:
                logger.info(f"Rendered {config.out_path}")
            else:
                logger.error(f"Demo {config.out_path.name} failed with exit code {code}")
        return all(code == 0 for code in self.results.values())

    def print_results(self) -> None:
        print("=" * 60)
        for name, code in self.results.items():
            print(f"{'ok' if code == 0 else 'FAILED':>6}  {name}")
        print("=" * 60)


def main() -> int:
    parser = argparse.ArgumentParser(description="Render the bundled glyphplot demos")
    parser.add_argument("--out-dir", default="demo_output", help="Directory for the SVG files")
    args = parser.parse_args()

    configure_logging("INFO")
    demos = DemoRunner(Path(args.out_dir))
    ok = demos.run_all()
    demos.print_results()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
