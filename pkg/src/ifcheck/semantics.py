"""Semantic analysis: hierarchy building, substitution, instantiation and member checks.

Two checking modes share all machinery. java8 mode rejects an interface that
transitively inherits some generic ancestor at two or more distinct argument
tuples; extended mode accepts it and merges the member tables, surfacing
same-signature/different-return clashes as notes instead of errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import Diagnostic
from .nodes import CompilationUnit, InterfaceDecl, MethodSig, TypeRef

ArgTuple = tuple[TypeRef, ...]


@dataclass(frozen=True)
class Substitution:
    """Finite map from type-parameter names to type references."""

    bindings: dict[str, TypeRef]

    def apply(self, t: TypeRef) -> TypeRef:
        return substitute(t, self)


def substitute(t: TypeRef, s: Substitution) -> TypeRef:
    """Replace parameter references in s's domain; other names are fixed."""
    if not t.args and t.name in s.bindings:
        return s.bindings[t.name]
    if not t.args:
        return t
    return TypeRef(t.name, tuple(substitute(a, s) for a in t.args), t.pos)


def compose(s1: Substitution, s2: Substitution) -> Substitution:
    """The substitution equivalent to applying s1 first, then s2."""
    out = {name: substitute(ref, s2) for name, ref in s1.bindings.items()}
    for name, ref in s2.bindings.items():
        out.setdefault(name, ref)
    return Substitution(out)


IDENTITY = Substitution({})


@dataclass(frozen=True)
class Instantiation:
    """A generic interface at a specific argument tuple."""

    interface_name: str
    args: ArgTuple

    def __str__(self) -> str:
        if not self.args:
            return self.interface_name
        return f"{self.interface_name}<{_fmt_args(self.args)}>"


def _fmt_args(args: ArgTuple) -> str:
    return ", ".join(str(a) for a in args)


@dataclass(frozen=True)
class InstantiationMap:
    """Distinct argument tuples per transitive ancestor, in first-encounter order."""

    entries: dict[str, list[ArgTuple]]

    def is_java8_valid(self) -> bool:
        return all(len(tuples) <= 1 for tuples in self.entries.values())


@dataclass(frozen=True)
class MemberSignature:
    """A fully substituted method as seen from the subject interface."""

    name: str
    param_types: ArgTuple
    return_type: TypeRef
    throws: tuple[str, ...]
    origin: Instantiation

    @property
    def override_key(self) -> tuple[str, ArgTuple]:
        return (self.name, self.param_types)

    @property
    def identity_key(self) -> tuple:
        return (self.name, self.param_types, self.return_type, frozenset(self.throws))

    def render(self) -> str:
        line = f"{self.name}({_fmt_args(self.param_types)}) -> {self.return_type}"
        if self.throws:
            line += " throws " + ", ".join(self.throws)
        return line + f"  [from {self.origin}]"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": [str(t) for t in self.param_types],
            "returns": str(self.return_type),
            "throws": list(self.throws),
            "origin": str(self.origin),
        }


@dataclass(frozen=True)
class CheckReport:
    interface_name: str
    mode: str  # "java8" or "extended"
    diagnostics: tuple[Diagnostic, ...]
    members: tuple[MemberSignature, ...]

    @property
    def error_count(self) -> int:
        return sum(1 for d in self.diagnostics if d.severity == "error")


@dataclass
class Hierarchy:
    """Immutable after build_hierarchy; all checks are read-only."""

    table: dict[str, InterfaceDecl]
    units: dict[str, CompilationUnit]  # declaring unit per interface
    problems: dict[str, list[Diagnostic]]  # local problems keyed by interface
    _member_cache: dict[str, list[MemberSignature]] = field(default_factory=dict)
    _checkable_cache: dict[str, bool] = field(default_factory=dict)
    _ancestor_cache: dict[str, frozenset[str]] = field(default_factory=dict)

    def checkable(self, name: str) -> bool:
        """True when the full super closure resolves without problems or cycles."""
        if name in self._checkable_cache:
            return self._checkable_cache[name]
        self._checkable_cache[name] = False  # cycles resolve to not-checkable
        ok = name in self.table and not self.problems.get(name)
        if ok:
            ok = all(
                ref.name in self.table and self.checkable(ref.name)
                for ref in self.table[name].super_refs
            )
        self._checkable_cache[name] = ok
        return ok

    def ancestor_names(self, name: str) -> frozenset[str]:
        if name in self._ancestor_cache:
            return self._ancestor_cache[name]
        out: set[str] = set()
        for ref in self.table[name].super_refs:
            out.add(ref.name)
            out |= self.ancestor_names(ref.name)
        result = frozenset(out)
        self._ancestor_cache[name] = result
        return result

    def member_table(self, name: str) -> list[MemberSignature]:
        """Members of an interface in its own vocabulary.

        Inherited members come first, deepest ancestor first (per super
        reference in declaration order); identical duplicates are coalesced
        keeping the first origin; own overrides replace the members they
        override in place; genuinely new own methods are appended.
        """
        if name in self._member_cache:
            return self._member_cache[name]
        decl = self.table[name]
        inherited: list[MemberSignature] = []
        for ref in decl.super_refs:
            target = self.table[ref.name]
            edge = Substitution(dict(zip(target.type_params, ref.args)))
            for m in self.member_table(target.name):
                inherited.append(substitute_member(m, edge))
        inherited = _coalesce(inherited)
        own_origin = Instantiation(name, tuple(TypeRef(p) for p in decl.type_params))
        own: dict[tuple[str, ArgTuple], MemberSignature] = {}
        for m in decl.methods:
            sig = MemberSignature(
                m.name, tuple(ty for ty, _ in m.params), m.return_type, m.throws, own_origin
            )
            own.setdefault(sig.override_key, sig)
        out: list[MemberSignature] = []
        replaced: set[tuple[str, ArgTuple]] = set()
        for m in inherited:
            o = own.get(m.override_key)
            if o is None:
                out.append(m)
            elif m.override_key not in replaced:
                out.append(o)
                replaced.add(m.override_key)
        for key, sig in own.items():
            if key not in replaced:
                out.append(sig)
        self._member_cache[name] = out
        return out


def substitute_member(m: MemberSignature, s: Substitution) -> MemberSignature:
    return MemberSignature(
        name=m.name,
        param_types=tuple(substitute(t, s) for t in m.param_types),
        return_type=substitute(m.return_type, s),
        throws=m.throws,
        origin=Instantiation(m.origin.interface_name, tuple(substitute(a, s) for a in m.origin.args)),
    )


def _coalesce(members: list[MemberSignature]) -> list[MemberSignature]:
    seen: set = set()
    out: list[MemberSignature] = []
    for m in members:
        if m.identity_key not in seen:
            seen.add(m.identity_key)
            out.append(m)
    return out


# hierarchy construction


def build_hierarchy(units: list[CompilationUnit]) -> tuple[Hierarchy, list[Diagnostic]]:
    """Build the interface table, diagnosing duplicate, unresolved, mis-applied
    and cyclic declarations."""
    table: dict[str, InterfaceDecl] = {}
    unit_of: dict[str, CompilationUnit] = {}
    problems: dict[str, list[Diagnostic]] = {}
    diags: list[Diagnostic] = []

    def problem(unit: CompilationUnit, name: str, line: int, column: int, message: str) -> None:
        echo = unit.raw_lines[line - 1] if 1 <= line <= len(unit.raw_lines) else ""
        d = Diagnostic("error", unit.source_name, line, message, echo, min(column, len(echo) + 1))
        diags.append(d)
        problems.setdefault(name, []).append(d)

    for unit in units:
        for decl in unit.decls:
            if decl.name in table:
                problem(unit, decl.name, decl.pos.line, 1, f"duplicate interface {decl.name}")
                continue
            table[decl.name] = decl
            unit_of[decl.name] = unit
            seen_params: set[str] = set()
            for p in decl.type_params:
                if p in seen_params:
                    problem(unit, decl.name, decl.pos.line, 1, f"duplicate type parameter {p}")
                seen_params.add(p)

    def validate_ref(decl: InterfaceDecl, unit: CompilationUnit, ref: TypeRef, is_super: bool) -> None:
        head_is_param = ref.name in decl.type_params
        if is_super and (head_is_param or ref.name not in table):
            problem(unit, decl.name, ref.pos.line, ref.pos.column, f"unknown super-interface: {ref.name}")
        elif head_is_param:
            if ref.args:
                problem(
                    unit, decl.name, ref.pos.line, ref.pos.column,
                    f"wrong number of type arguments: {ref.name} expects 0",
                )
        elif ref.name in table:
            arity = len(table[ref.name].type_params)
            if len(ref.args) != arity:
                problem(
                    unit, decl.name, ref.pos.line, ref.pos.column,
                    f"wrong number of type arguments: {ref.name} expects {arity}",
                )
        # names outside the table are opaque external types in member positions
        for a in ref.args:
            validate_ref(decl, unit, a, False)

    for name, decl in table.items():
        unit = unit_of[name]
        for ref in decl.super_refs:
            validate_ref(decl, unit, ref, True)
        for m in decl.methods:
            validate_ref(decl, unit, m.return_type, False)
            for ty, _ in m.params:
                validate_ref(decl, unit, ty, False)

    # cycle detection over resolvable extends edges
    WHITE, GREY, BLACK = 0, 1, 2
    color = {name: WHITE for name in table}
    stack: list[str] = []

    def visit(name: str) -> None:
        color[name] = GREY
        stack.append(name)
        for ref in table[name].super_refs:
            if ref.name not in table:
                continue
            if color[ref.name] == WHITE:
                visit(ref.name)
            elif color[ref.name] == GREY:
                cycle = stack[stack.index(ref.name):] + [ref.name]
                decl = table[cycle[0]]
                problem(
                    unit_of[cycle[0]], cycle[0], decl.pos.line, 1,
                    "cyclic inheritance: " + " -> ".join(cycle),
                )
        stack.pop()
        color[name] = BLACK

    for name in table:
        if color[name] == WHITE:
            visit(name)

    return Hierarchy(table, unit_of, problems), diags


# instantiation collection


def collect_instantiations(subject: InterfaceDecl, hierarchy: Hierarchy) -> InstantiationMap:
    """Every transitive ancestor with the distinct argument tuples reaching it.

    Walks every extends path depth-first in declaration order, substituting
    arguments stepwise; the subject itself is excluded.
    """
    entries: dict[str, list[ArgTuple]] = {}
    work: list[tuple[TypeRef, Substitution]] = [
        (ref, IDENTITY) for ref in reversed(subject.super_refs)
    ]
    while work:
        ref, sub = work.pop()
        target = hierarchy.table[ref.name]
        args = tuple(substitute(a, sub) for a in ref.args)
        bucket = entries.setdefault(target.name, [])
        if args not in bucket:
            bucket.append(args)
        edge = Substitution(dict(zip(target.type_params, args)))
        for sref in reversed(target.super_refs):
            work.append((sref, edge))
    return InstantiationMap(entries)


# checks


def _decl_diag(
    subject: InterfaceDecl, unit: CompilationUnit, severity: str, message: str,
    line: int | None = None, column: int = 1,
) -> Diagnostic:
    line = subject.pos.line if line is None else line
    echo = unit.raw_lines[line - 1] if 1 <= line <= len(unit.raw_lines) else ""
    return Diagnostic(severity, unit.source_name, line, message, echo, min(column, len(echo) + 1))


def _guard(subject: InterfaceDecl, hierarchy: Hierarchy, mode: str) -> CheckReport | None:
    if hierarchy.table.get(subject.name) is not subject or not hierarchy.checkable(subject.name):
        own = tuple(hierarchy.problems.get(subject.name, []))
        return CheckReport(subject.name, mode, own, ())
    return None


def _ambiguity_diags(
    subject: InterfaceDecl, unit: CompilationUnit, members: list[MemberSignature], severity: str
) -> list[Diagnostic]:
    """One diagnostic per (name, paramTypes) group whose return types disagree."""
    groups: dict[tuple[str, ArgTuple], list[MemberSignature]] = {}
    for m in members:
        groups.setdefault(m.override_key, []).append(m)
    out: list[Diagnostic] = []
    for (name, params), ms in groups.items():
        if len({m.return_type for m in ms}) >= 2:
            origins = ", ".join(str(m.origin) for m in ms)
            msg = f"ambiguous inherited member: {name}({_fmt_args(params)}) from <{origins}>"
            out.append(_decl_diag(subject, unit, severity, msg))
    return out


def check_overrides(subject: InterfaceDecl, hierarchy: Hierarchy) -> list[Diagnostic]:
    """An own method overriding an inherited one must keep the return type.

    Throws sets may differ freely: every exception is treated as unchecked.
    """
    unit = hierarchy.units[subject.name]
    inherited: list[MemberSignature] = []
    for ref in subject.super_refs:
        target = hierarchy.table[ref.name]
        edge = Substitution(dict(zip(target.type_params, ref.args)))
        inherited.extend(substitute_member(m, edge) for m in hierarchy.member_table(target.name))
    diags: list[Diagnostic] = []
    for m in subject.methods:
        own_params = tuple(ty for ty, _ in m.params)
        for im in inherited:
            if (im.name, im.param_types) == (m.name, own_params) and im.return_type != m.return_type:
                msg = f"incompatible return type in override: {m.name}({_fmt_args(own_params)})"
                diags.append(
                    _decl_diag(subject, unit, "error", msg, line=m.pos.line, column=m.pos.column)
                )
                break
    return diags


def _conflicts(subject: InterfaceDecl, hierarchy: Hierarchy) -> list[tuple[str, ArgTuple, ArgTuple]]:
    """Multiply instantiated ancestors worth reporting, in encounter order.

    An ancestor is suppressed when it is itself a transitive ancestor of
    another conflicting ancestor; its conflict is implied by the nearer one,
    and javac reports only the nearest.
    """
    inst = collect_instantiations(subject, hierarchy)
    conflicted = [name for name, tuples in inst.entries.items() if len(tuples) >= 2]
    out = []
    for name in conflicted:
        if any(other != name and name in hierarchy.ancestor_names(other) for other in conflicted):
            continue
        tuples = inst.entries[name]
        out.append((name, tuples[0], tuples[1]))
    return out


def check_java8(subject: InterfaceDecl, hierarchy: Hierarchy) -> CheckReport:
    """Reject multiple instantiations of an inherited ancestor, javac-style."""
    guard = _guard(subject, hierarchy, "java8")
    if guard is not None:
        return guard
    unit = hierarchy.units[subject.name]
    diags: list[Diagnostic] = []
    for name, first, second in _conflicts(subject, hierarchy):
        msg = (
            f"{name} cannot be inherited with different arguments: "
            f"<{_fmt_args(first)}> and <{_fmt_args(second)}>"
        )
        diags.append(_decl_diag(subject, unit, "error", msg))
    if diags:
        return CheckReport(subject.name, "java8", tuple(diags), ())
    members = hierarchy.member_table(subject.name)
    diags = _ambiguity_diags(subject, unit, members, "error")
    diags += check_overrides(subject, hierarchy)
    if diags:
        return CheckReport(subject.name, "java8", tuple(diags), ())
    return CheckReport(subject.name, "java8", (), tuple(members))


def check_extended(subject: InterfaceDecl, hierarchy: Hierarchy) -> CheckReport:
    """Accept multiple instantiations; merge members and surface clashes as notes."""
    guard = _guard(subject, hierarchy, "extended")
    if guard is not None:
        return guard
    unit = hierarchy.units[subject.name]
    members = hierarchy.member_table(subject.name)
    diags = check_overrides(subject, hierarchy)
    diags += _ambiguity_diags(subject, unit, members, "note")
    return CheckReport(subject.name, "extended", tuple(diags), tuple(members))


def merge_members(subject: InterfaceDecl, hierarchy: Hierarchy) -> list[MemberSignature]:
    """The subject's full member table, deterministic order."""
    return hierarchy.member_table(subject.name)


def check(subject: InterfaceDecl, hierarchy: Hierarchy, mode: str) -> CheckReport:
    if mode == "java8":
        return check_java8(subject, hierarchy)
    if mode == "extended":
        return check_extended(subject, hierarchy)
    raise ValueError(f"unknown mode: {mode}")
