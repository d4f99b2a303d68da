"""Command line front end.

Diagnostics go to stderr (javac behavior); member tables and reports go to
stdout. Exit codes: 0 when no error diagnostics (notes allowed), 1 when any
error was reported or a golden/law check failed, 2 on usage or IO failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra.laws import (
    check_laws,
    integer_ring_witness,
    rational_field_witness,
    vector_space_witness,
)
from .corpus import load_corpus
from .driver import MODES, RunResult, check_sources, verify_goldens

_WITNESSES = {
    "rationals": rational_field_witness,
    "integers": integer_ring_witness,
    "vectors": vector_space_witness,
}


def _check_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ifcheck",
        description="Check generic-interface sources; see also the `laws` subcommand.",
    )
    p.add_argument("inputs", nargs="*", metavar="FILE", help="source files to check")
    p.add_argument("--mode", choices=MODES, default="java8",
                   help="checking mode (default: java8)")
    p.add_argument("--emit-members", nargs="?", const="text", choices=("text", "machine"),
                   default=None, help="print the member table of each checked interface")
    p.add_argument("--golden", metavar="DIR",
                   help="verify the corpus against stored golden transcripts and exit")
    p.add_argument("--corpus", action="store_true", help="check the embedded corpus")
    p.add_argument("--no-ambient", action="store_true",
                   help="do not preload the clean corpus as the ambient library")
    return p


def _laws_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ifcheck laws",
                                description="Run an equational-law suite.")
    p.add_argument("--structure", choices=sorted(_WITNESSES), required=True)
    p.add_argument("--samples", type=int, default=1000, metavar="N")
    p.add_argument("--seed", type=int, default=42, metavar="S")
    return p


def _emit_members(result: RunResult, fmt: str) -> str:
    tables = [(r.interface_name, r.members) for r in result.reports if r.members]
    if fmt == "machine":
        doc = {name: [m.to_json() for m in members] for name, members in tables}
        return json.dumps(doc, indent=2) + "\n"
    blocks = ["\n".join(m.render() for m in members) for _, members in tables]
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def _run_check(argv: list[str]) -> int:
    parser = _check_parser()
    args = parser.parse_args(argv)
    if args.golden:
        code, lines = verify_goldens(args.golden)
        for line in lines:
            print(line)
        return code
    sources: list[tuple[str, str]] = []
    for path in args.inputs:
        try:
            with open(path, encoding="utf-8") as fh:
                sources.append((path, fh.read()))
        except OSError as exc:
            print(f"ifcheck: cannot read {path}: {exc.strerror or exc}", file=sys.stderr)
            return 2
    if args.corpus:
        sources.extend((e.relative_path, e.content) for e in load_corpus())
    if not sources:
        parser.error("at least one input file is required (or --corpus)")
    result = check_sources(sources, args.mode, ambient=not args.no_ambient)
    sys.stderr.write(result.transcript.text())
    if args.emit_members:
        sys.stdout.write(_emit_members(result, args.emit_members))
    return result.exit_code


def _run_laws(argv: list[str]) -> int:
    parser = _laws_parser()
    args = parser.parse_args(argv)
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    report = check_laws(_WITNESSES[args.structure](), args.samples, args.seed)
    for line in report.lines():
        print(line)
    failed = sum(1 for r in report.results if not r.passed)
    verdict = "all passed" if failed == 0 else f"{failed} failed"
    print(f"{len(report.results)} laws, {report.samples} samples, seed {report.seed}: {verdict}")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "laws":
        return _run_laws(argv[1:])
    return _run_check(argv)


if __name__ == "__main__":
    sys.exit(main())
