"""AST for the interface language: type references, method signatures, declarations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import SourcePos

_ORIGIN = SourcePos(1, 1)


@dataclass(frozen=True)
class TypeRef:
    """A named type applied to zero or more type arguments.

    Type-parameter references are TypeRefs with empty args; equality is
    structural and ignores source positions.
    """

    name: str
    args: tuple[TypeRef, ...] = ()
    pos: SourcePos = field(default=_ORIGIN, compare=False)

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}<{', '.join(str(a) for a in self.args)}>"


@dataclass(frozen=True)
class MethodSig:
    name: str
    return_type: TypeRef
    params: tuple[tuple[TypeRef, str], ...]  # (type, parameter name)
    throws: tuple[str, ...]
    pos: SourcePos = field(default=_ORIGIN, compare=False)


@dataclass(frozen=True)
class InterfaceDecl:
    name: str
    type_params: tuple[str, ...]
    super_refs: tuple[TypeRef, ...]
    methods: tuple[MethodSig, ...]
    pos: SourcePos = field(default=_ORIGIN, compare=False)


@dataclass(frozen=True)
class CompilationUnit:
    package_name: str
    decls: tuple[InterfaceDecl, ...]
    source_name: str
    raw_lines: tuple[str, ...]

    def structure(self) -> tuple:
        """Position-free shape, for structural AST comparison."""
        return (self.package_name, self.decls)


def render_unit(unit: CompilationUnit) -> str:
    """Pretty-print a unit so that re-parsing yields a structurally identical AST."""
    out: list[str] = []
    if unit.package_name:
        out.append(f"package {unit.package_name};")
        out.append("")
    for decl in unit.decls:
        header = f"interface {decl.name}"
        if decl.type_params:
            header += f" <{', '.join(decl.type_params)}>"
        if decl.super_refs:
            header += f" extends {', '.join(str(r) for r in decl.super_refs)}"
        out.append(header + " {")
        for m in decl.methods:
            params = ", ".join(f"{ty} {name}" for ty, name in m.params)
            line = f"    {m.return_type} {m.name}({params})"
            if m.throws:
                line += f" throws {', '.join(m.throws)}"
            out.append(line + ";")
        out.append("}")
        out.append("")
    return "\n".join(out)
