"""javac-style diagnostic records, transcript rendering, and golden comparison."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Diagnostic:
    """One message anchored to a source position, rendered as three lines."""

    severity: str  # "error" or "note"
    file: str
    line: int
    message: str
    echo_line: str
    caret_column: int

    def __post_init__(self) -> None:
        assert self.severity in ("error", "note")
        assert self.message
        assert 1 <= self.caret_column <= len(self.echo_line) + 1

    def render(self) -> list[str]:
        """Header line, echoed source line, caret line."""
        return [
            f"{self.file}:{self.line}: {self.severity}: {self.message}",
            self.echo_line,
            " " * (self.caret_column - 1) + "^",
        ]


@dataclass(frozen=True)
class Transcript:
    rendered_lines: tuple[str, ...]
    error_count: int

    def text(self) -> str:
        if not self.rendered_lines:
            return ""
        return "\n".join(self.rendered_lines) + "\n"


def render_transcript(diagnostics: list[Diagnostic]) -> Transcript:
    """Render diagnostics in order; append the javac error-count trailer.

    Notes are rendered but not counted; no trailer when there are no errors.
    """
    lines: list[str] = []
    errors = 0
    for d in diagnostics:
        lines.extend(d.render())
        if d.severity == "error":
            errors += 1
    if errors == 1:
        lines.append("1 error")
    elif errors > 1:
        lines.append(f"{errors} errors")
    return Transcript(tuple(lines), errors)


@dataclass(frozen=True)
class GoldenComparison:
    matched: bool
    line: int | None = None
    expected: str | None = None
    actual: str | None = None

    def describe(self) -> str:
        if self.matched:
            return "match"
        return f"divergence at line {self.line}: expected {self.expected!r}, got {self.actual!r}"


class GoldenMissingError(FileNotFoundError):
    pass


def compare_golden(transcript: Transcript, golden_file: Path) -> GoldenComparison:
    """Compare a transcript against a stored golden, ignoring trailing whitespace per line."""
    if not golden_file.is_file():
        raise GoldenMissingError(str(golden_file))
    golden_lines = golden_file.read_text(encoding="utf-8").splitlines()
    actual_lines = list(transcript.rendered_lines)
    for i, (exp, act) in enumerate(zip(golden_lines, actual_lines), start=1):
        if exp.rstrip() != act.rstrip():
            return GoldenComparison(False, i, exp, act)
    if len(golden_lines) != len(actual_lines):
        n = min(len(golden_lines), len(actual_lines)) + 1
        exp = golden_lines[n - 1] if n <= len(golden_lines) else None
        act = actual_lines[n - 1] if n <= len(actual_lines) else None
        return GoldenComparison(False, n, exp, act)
    return GoldenComparison(True)
