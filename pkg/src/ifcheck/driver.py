"""Batch checking: parse inputs, resolve against the ambient corpus, run a mode."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .corpus import CorpusEntry, clean_entries, load_corpus
from .diagnostics import (
    Diagnostic,
    GoldenComparison,
    GoldenMissingError,
    Transcript,
    compare_golden,
    render_transcript,
)
from .nodes import CompilationUnit
from .parser import parse_source
from .semantics import CheckReport, build_hierarchy, check

MODES = ("java8", "extended")


@dataclass(frozen=True)
class RunResult:
    diagnostics: tuple[Diagnostic, ...]
    transcript: Transcript
    reports: tuple[CheckReport, ...]

    @property
    def exit_code(self) -> int:
        return 1 if self.transcript.error_count else 0


def _ambient_units(shadowed: set[str]) -> list[CompilationUnit]:
    """The eight clean corpus interfaces, minus any redeclared by the inputs."""
    units = []
    for entry in clean_entries():
        unit, diags = parse_source(entry.content, entry.relative_path)
        assert not diags, f"ambient corpus entry {entry.name} must parse cleanly"
        if all(d.name not in shadowed for d in unit.decls):
            units.append(unit)
    return units


def check_sources(
    named_sources: list[tuple[str, str]], mode: str, ambient: bool = True
) -> RunResult:
    """Check (source_name, text) inputs in the given mode.

    Inputs are parsed first; by default the clean corpus is added as an
    ambient library so single-file checks resolve their supers. Diagnostics
    are grouped per input in input order: lexer and parse errors, then
    hierarchy errors anchored in that input, then per-declaration reports.
    Declarations in a unit with parse errors are not semantically checked.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode: {mode}")
    parsed: list[tuple[CompilationUnit, list[Diagnostic]]] = [
        parse_source(text, name) for name, text in named_sources
    ]
    declared = {d.name for unit, _ in parsed for d in unit.decls}
    units = [unit for unit, _ in parsed]
    all_units = units + (_ambient_units(declared) if ambient else [])
    hierarchy, hier_diags = build_hierarchy(all_units)

    diagnostics: list[Diagnostic] = []
    reports: list[CheckReport] = []
    for unit, parse_diags in parsed:
        diagnostics.extend(parse_diags)
        diagnostics.extend(d for d in hier_diags if d.file == unit.source_name)
        if parse_diags:
            continue
        for decl in unit.decls:
            if hierarchy.table.get(decl.name) is not decl:
                continue  # shadowed duplicate; its error is already reported
            report = check(decl, hierarchy, mode)
            reports.append(report)
            diagnostics.extend(
                d for d in report.diagnostics if d not in hierarchy.problems.get(decl.name, [])
            )
    return RunResult(tuple(diagnostics), render_transcript(diagnostics), tuple(reports))


def check_files(paths: list[str | Path], mode: str, ambient: bool = True) -> RunResult:
    sources = [(str(p), Path(p).read_text(encoding="utf-8")) for p in paths]
    return check_sources(sources, mode, ambient)


def run_corpus_entry(entry: CorpusEntry, mode: str) -> RunResult:
    return check_sources([(entry.relative_path, entry.content)], mode)


@dataclass(frozen=True)
class GoldenResult:
    entry_name: str
    mode: str
    comparison: GoldenComparison

    def describe(self) -> str:
        status = "OK" if self.comparison.matched else "DIVERGED"
        detail = "" if self.comparison.matched else f": {self.comparison.describe()}"
        return f"{status} {self.entry_name} [{self.mode}]{detail}"


def verify_goldens(golden_dir: str | Path) -> tuple[int, list[str]]:
    """Run every corpus entry in both modes against its stored transcript.

    Returns (exit code, report lines): 0 all match, 1 on divergence, 2 when a
    golden file is missing.
    """
    golden_dir = Path(golden_dir)
    lines: list[str] = []
    exit_code = 0
    for entry in load_corpus():
        for mode in MODES:
            golden_name = entry.expected_java8 if mode == "java8" else entry.expected_extended
            result = run_corpus_entry(entry, mode)
            try:
                comparison = compare_golden(result.transcript, golden_dir / golden_name)
            except GoldenMissingError as exc:
                lines.append(f"MISSING {entry.name} [{mode}]: {exc}")
                return 2, lines
            gr = GoldenResult(entry.name, mode, comparison)
            lines.append(gr.describe())
            if not comparison.matched:
                exit_code = 1
    return exit_code, lines
