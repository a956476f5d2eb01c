"""Command-line entry point: validate | build | serve | report.

Exit codes are a stable contract: 0 success, 1 validation or classification
problems, 2 I/O errors (missing input, unreadable trees).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import BuildConfig, apply_config_file
from .loader import LexiconIOError, load_lexicon, validate
from .compiler import PageBuildError
from .pipeline import report_text, run_build, write_output

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairlex",
        description="Contrastive Russian-Bulgarian dictionary compiler",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", default="data/seed", help="lexicon source directory")
        p.add_argument("--out", default="out", help="output directory")
        p.add_argument(
            "--admit-pre-registered",
            action=argparse.BooleanOptionalAction,
            default=True,
            help="admit pre-registered lexemes into classification",
        )
        p.add_argument("--max-chain-depth", type=int, default=4)
        p.add_argument("--false-threshold", type=float, default=0.25)
        p.add_argument("--hits-per-page", type=int, default=10)
        p.add_argument("--port", type=int, default=8000)

    for name, help_text in (
        ("validate", "load the lexicon and print diagnostics"),
        ("build", "run the full pipeline and write the output tree"),
        ("serve", "serve a built output tree with the JSON API"),
        ("report", "print the build report of an existing output tree"),
    ):
        common(sub.add_parser(name, help=help_text))
    return parser


def _config(args: argparse.Namespace) -> BuildConfig:
    config = BuildConfig(
        input_dir=args.input,
        out_dir=args.out,
        admit_pre_registered=args.admit_pre_registered,
        max_chain_depth=args.max_chain_depth,
        false_similarity_threshold=args.false_threshold,
        hits_per_page=args.hits_per_page,
        port=args.port,
    )
    config = apply_config_file(config)
    config.check()
    return config


def cmd_validate(config: BuildConfig) -> int:
    try:
        model, diagnostics = load_lexicon(config.input_dir)
    except LexiconIOError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    diagnostics = diagnostics + validate(model)
    for diagnostic in diagnostics:
        print(diagnostic)
    if diagnostics:
        print(f"{len(diagnostics)} problem(s) found", file=sys.stderr)
        return EXIT_INVALID
    print(f"ok: {len(model.lexemes)} lexemes, {len(model.senses)} senses, "
          f"{len(model.declared_pairs)} declared pairs")
    return EXIT_OK


def cmd_build(config: BuildConfig) -> int:
    try:
        model, diagnostics = load_lexicon(config.input_dir)
    except LexiconIOError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    diagnostics = diagnostics + validate(model)
    if diagnostics:
        for diagnostic in diagnostics:
            print(diagnostic, file=sys.stderr)
        return EXIT_INVALID
    try:
        result = run_build(model, config)
    except PageBuildError as exc:
        print(f"build error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        out = write_output(result, config.out_dir)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(report_text(result.report))
    print(f"output written to {out}")
    return EXIT_OK


def cmd_report(config: BuildConfig) -> int:
    path = Path(config.out_dir) / "report.json"
    if not path.exists():
        print(f"io error: no report at {path}", file=sys.stderr)
        return EXIT_IO
    report = json.loads(path.read_text(encoding="utf-8"))
    sys.stdout.write(report_text(report))
    return EXIT_OK


def cmd_serve(config: BuildConfig) -> int:
    try:
        from .server import create_app

        app = create_app(config.out_dir, config.hits_per_page)
    except FileNotFoundError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=config.port, log_level="info")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = _config(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_IO
    handler = {
        "validate": cmd_validate,
        "build": cmd_build,
        "serve": cmd_serve,
        "report": cmd_report,
    }[args.command]
    return handler(config)


if __name__ == "__main__":
    sys.exit(main())
