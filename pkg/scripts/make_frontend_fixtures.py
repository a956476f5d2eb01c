#!/usr/bin/env python3
"""Regenerate frontend test fixtures from a fresh seed build.

The frontend consumes the engine only through its external interfaces, so
its tests run against real emitted pages and index files. Re-run after any
change to the emitter or the seed:

    python3 scripts/make_frontend_fixtures.py
"""

from __future__ import annotations

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from pairlex.config import BuildConfig
from pairlex.loader import load_lexicon, validate
from pairlex.pipeline import run_build, write_output

FIXTURES = ROOT / "frontend" / "test" / "fixtures"
PAGES = ("LGAT-LAZHA", "VESHAT-BESYA", "GROZYA")


def main() -> None:
    model, diagnostics = load_lexicon(ROOT / "data" / "seed")
    problems = diagnostics + validate(model)
    if problems:
        for problem in problems:
            print(problem)
        raise SystemExit(1)
    result = run_build(model, BuildConfig())
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "out"
        write_output(result, out)
        FIXTURES.mkdir(parents=True, exist_ok=True)
        for slug in PAGES:
            shutil.copy(out / "pages" / f"{slug}.html", FIXTURES / f"{slug}.html")
            shutil.copy(out / "pages" / f"{slug}.json", FIXTURES / f"{slug}.json")
        shutil.copy(out / "assets" / "legend.json", FIXTURES / "legend.json")
        shutil.copy(out / "index" / "alpha_ru.json", FIXTURES / "alpha_ru.json")
        shutil.copy(out / "index" / "alpha_bg.json", FIXTURES / "alpha_bg.json")
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
