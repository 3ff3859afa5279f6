#!/usr/bin/env python3
"""Regenerate the files under fixtures/ from the built-in catalog.

Run from the repository root:  python tools/gen_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from cohomotopy.catalog import (ALGEBRAIC_MODELS, SIMPLICIAL_FIXTURES,
                                model_json)


def main():
    root = pathlib.Path(__file__).resolve().parents[1] / "fixtures"
    root.mkdir(exist_ok=True)
    for name, build in SIMPLICIAL_FIXTURES.items():
        path = root / f"{name}.facets"
        path.write_text(build().serialize(), encoding="utf-8")
        print(f"wrote {path}")
    for name in ALGEBRAIC_MODELS:
        path = root / f"{name}.json"
        path.write_text(model_json(name) + "\n", encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
