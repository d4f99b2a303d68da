"""Recursive-descent parser with javac-flavored panic-mode error recovery.

The grammar is deliberately tiny: one package declaration, then interface
declarations with optional simple type parameters, an extends list of applied
type references, and abstract method signatures with optional throws. Type
parameters must be plain identifiers; an applied type in a parameter position
is a syntax error in every mode.

Recovery model: a failure while parsing a declaration header abandons the
header, and the parser falls back to a stray-token automaton at declaration
scope. The automaton makes its structural decisions at {',' ';' '{' '}' EOF}:
dangling '>' or ',' runs close a malformed declarator ("';' expected"), a
stray '{' is an illegal type start and flips to member-declaration position,
'}' closes it again, and identifiers start loose declarations that demand a
declarator name. Every step consumes at least one token, so recovery
terminates on arbitrary input and each token is consumed at most once.

"X expected" diagnostics anchor after the last consumed token; "illegal start
of type" and the member-position "'(' expected" anchor at the offending token.
"""

from __future__ import annotations

from .diagnostics import Diagnostic
from .lexer import Token, TokenKind, tokenize
from .nodes import CompilationUnit, InterfaceDecl, MethodSig, TypeRef

K = TokenKind


class _Parser:
    def __init__(self, tokens: list[Token], raw_lines: list[str], source_name: str) -> None:
        self.toks = tokens
        self.i = 0
        self.prev: Token | None = None
        self.raw_lines = raw_lines
        self.source_name = source_name
        self.diags: list[Diagnostic] = []

    # token plumbing

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def at(self, kind: TokenKind) -> bool:
        return self.cur.kind is kind

    def peek2(self) -> Token:
        return self.toks[min(self.i + 1, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.cur
        if t.kind is not K.EOF:
            self.prev = t
            self.i += 1
        return t

    # diagnostics

    def _emit(self, line: int, column: int, message: str) -> None:
        echo = self.raw_lines[line - 1] if 1 <= line <= len(self.raw_lines) else ""
        column = max(1, min(column, len(echo) + 1))
        self.diags.append(Diagnostic("error", self.source_name, line, message, echo, column))

    def error_expected(self, message: str) -> None:
        """Anchor after the last consumed token, javac accept-style."""
        if self.prev is not None:
            self._emit(self.prev.pos.line, self.prev.end_column, message)
        else:
            self._emit(self.cur.pos.line, self.cur.pos.column, message)

    def error_here(self, message: str) -> None:
        self._emit(self.cur.pos.line, self.cur.pos.column, message)

    # unit structure

    def parse_unit(self) -> CompilationUnit:
        package = ""
        if self.at(K.PACKAGE):
            package = self.parse_package()
        decls: list[InterfaceDecl] = []
        depth = 0  # stray brace depth; > 0 means member-declaration position
        while not self.at(K.EOF):
            if self.at(K.INTERFACE):
                depth = 0
                decls.append(self.parse_interface())
            else:
                depth = self.stray_step(depth)
        return CompilationUnit(package, tuple(decls), self.source_name, tuple(self.raw_lines))

    def parse_package(self) -> str:
        self.advance()
        parts: list[str] = []
        if self.at(K.IDENT):
            parts.append(self.advance().lexeme)
            while self.at(K.DOT) and self.peek2().kind is K.IDENT:
                self.advance()
                parts.append(self.advance().lexeme)
        else:
            self.error_expected("<identifier> expected")
        if self.at(K.SEMI):
            self.advance()
        else:
            self.error_expected("';' expected")
        return ".".join(parts)

    def parse_interface(self) -> InterfaceDecl:
        kw = self.advance()
        if not self.at(K.IDENT):
            self.error_expected("<identifier> expected")
            return InterfaceDecl("<error>", (), (), (), kw.pos)
        name = self.advance().lexeme
        type_params: list[str] = []
        if self.at(K.LT):
            self.advance()
            if not self.parse_type_params(type_params):
                return InterfaceDecl(name, tuple(type_params), (), (), kw.pos)
        supers: list[TypeRef] = []
        if self.at(K.EXTENDS):
            self.advance()
            if not self.parse_extends(supers):
                return InterfaceDecl(name, tuple(type_params), tuple(supers), (), kw.pos)
        if not self.at(K.LBRACE):
            self.error_expected("'{' expected")
            return InterfaceDecl(name, tuple(type_params), tuple(supers), (), kw.pos)
        self.advance()
        methods = self.parse_members()
        return InterfaceDecl(name, tuple(type_params), tuple(supers), tuple(methods), kw.pos)

    def parse_type_params(self, out: list[str]) -> bool:
        """Parse identifiers up to '>'. Returns False when the header is abandoned."""
        while True:
            if not self.at(K.IDENT):
                self.error_expected("<identifier> expected")
                return False
            out.append(self.advance().lexeme)
            if self.at(K.COMMA):
                self.advance()
                continue
            if self.at(K.GT):
                self.advance()
                return True
            # a second '<' (or any other stray token) cannot continue the list
            self.error_expected("> expected")
            return False

    def parse_extends(self, out: list[TypeRef]) -> bool:
        while True:
            ref = self.parse_type_ref()
            if ref is None:
                return False
            out.append(ref)
            if self.at(K.COMMA):
                self.advance()
                continue
            return True

    def parse_type_ref(self) -> TypeRef | None:
        if not self.at(K.IDENT):
            self.error_expected("<identifier> expected")
            return None
        head = self.advance()
        args: list[TypeRef] = []
        if self.at(K.LT):
            self.advance()
            while True:
                arg = self.parse_type_ref()
                if arg is None:
                    return None
                args.append(arg)
                if self.at(K.COMMA):
                    self.advance()
                    continue
                if self.at(K.GT):
                    self.advance()
                    break
                self.error_expected("> expected")
                return None
        return TypeRef(head.lexeme, tuple(args), head.pos)

    # members of a successfully opened body

    def parse_members(self) -> list[MethodSig]:
        methods: list[MethodSig] = []
        while True:
            if self.at(K.RBRACE):
                self.advance()
                return methods
            if self.at(K.EOF):
                self.error_expected("'}' expected")
                return methods
            if self.at(K.SEMI):
                self.advance()
                continue
            m = self.parse_member()
            if m is not None:
                methods.append(m)
            else:
                self.skip_to_member_boundary()

    def parse_member(self) -> MethodSig | None:
        start = self.cur.pos
        ret = self.parse_type_ref()
        if ret is None:
            return None
        if not self.at(K.IDENT):
            self.error_expected("<identifier> expected")
            return None
        name = self.advance().lexeme
        if not self.at(K.LPAREN):
            self.error_expected("'(' expected")
            return None
        self.advance()
        params: list[tuple[TypeRef, str]] = []
        if not self.at(K.RPAREN):
            while True:
                ty = self.parse_type_ref()
                if ty is None:
                    return None
                if not self.at(K.IDENT):
                    self.error_expected("<identifier> expected")
                    return None
                params.append((ty, self.advance().lexeme))
                if self.at(K.COMMA):
                    self.advance()
                    continue
                break
        if not self.at(K.RPAREN):
            self.error_expected("')' expected")
            return None
        self.advance()
        throws: list[str] = []
        if self.at(K.THROWS):
            self.advance()
            while True:
                if not self.at(K.IDENT):
                    self.error_expected("<identifier> expected")
                    return None
                throws.append(self.advance().lexeme)
                if self.at(K.COMMA):
                    self.advance()
                    continue
                break
        if not self.at(K.SEMI):
            self.error_expected("';' expected")
            return None
        self.advance()
        return MethodSig(name, ret, tuple(params), tuple(throws), start)

    def skip_to_member_boundary(self) -> None:
        while not self.at(K.EOF):
            if self.at(K.SEMI):
                self.advance()
                return
            if self.at(K.RBRACE):
                return
            self.advance()

    # stray-token recovery at declaration scope

    def stray_step(self, depth: int) -> int:
        t = self.cur
        if t.kind is K.SEMI:
            self.advance()
        elif t.kind is K.RBRACE:
            self.advance()
            depth = max(0, depth - 1)
        elif t.kind is K.LBRACE:
            self.error_here("illegal start of type")
            self.advance()
            depth += 1
        elif t.kind in (K.COMMA, K.GT):
            while self.cur.kind in (K.COMMA, K.GT):
                self.advance()
            self.error_expected("';' expected")
        elif t.kind is K.IDENT:
            if depth > 0 and self.peek2().kind is K.LT:
                self.stray_generic_member()
            else:
                self.stray_loose_decl()
        else:
            # leftover keywords and punctuation carry no structure; drop them
            self.advance()
        return depth

    def stray_loose_decl(self) -> None:
        """A type-looking sequence at declaration scope must be followed by a declarator."""
        self.loose_type_ref()
        t = self.cur
        if t.kind is K.IDENT:
            self.advance()
            if self.at(K.LPAREN):
                self.loose_method_rest()
            elif self.at(K.SEMI):
                self.advance()
        elif t.kind in (K.LBRACE, K.SEMI):
            pass  # the next step classifies the brace or drops the semicolon
        else:
            self.error_expected("<identifier> expected")

    def stray_generic_member(self) -> None:
        """Member position saw `Ident <`, where only a method declarator fits."""
        self.error_here("'(' expected")
        self.advance()
        self.skip_angle_group()
        self.loose_type_ref()
        if self.at(K.IDENT):
            self.advance()
            if self.at(K.LPAREN):
                self.loose_method_rest()
        else:
            self.error_expected("<identifier> expected")
            if self.at(K.LPAREN):
                self.loose_method_rest()

    def loose_type_ref(self) -> TypeRef | None:
        """Best-effort type reference; silent, never consumes a non-matching token."""
        if not self.at(K.IDENT):
            return None
        head = self.advance()
        args: list[TypeRef] = []
        if self.at(K.LT):
            self.advance()
            while True:
                arg = self.loose_type_ref()
                if arg is None:
                    break
                args.append(arg)
                if self.at(K.COMMA):
                    self.advance()
                    continue
                break
            if self.at(K.GT):
                self.advance()
        return TypeRef(head.lexeme, tuple(args), head.pos)

    def skip_angle_group(self) -> None:
        """Consume a balanced <...> group, stopping at structural anchors."""
        depth = 0
        while not self.at(K.EOF):
            k = self.cur.kind
            if k in (K.SEMI, K.LBRACE, K.RBRACE):
                return
            self.advance()
            if k is K.LT:
                depth += 1
            elif k is K.GT:
                depth -= 1
                if depth <= 0:
                    return

    def loose_method_rest(self) -> None:
        """Consume `(...)` plus optional throws clause and semicolon, silently."""
        self.advance()
        while not self.at(K.EOF):
            if self.at(K.RPAREN):
                self.advance()
                break
            if self.cur.kind in (K.SEMI, K.LBRACE, K.RBRACE):
                break
            self.advance()
        if self.at(K.THROWS):
            self.advance()
            while self.at(K.IDENT):
                self.advance()
                if self.at(K.COMMA) and self.peek2().kind is K.IDENT:
                    self.advance()
                    continue
                break
        if self.at(K.SEMI):
            self.advance()


def parse_unit(
    tokens: list[Token], raw_lines: list[str], source_name: str
) -> tuple[CompilationUnit, list[Diagnostic]]:
    """Parse a token stream into a best-effort AST plus error diagnostics."""
    p = _Parser(tokens, list(raw_lines), source_name)
    unit = p.parse_unit()
    return unit, p.diags


def parse_source(source: str, source_name: str) -> tuple[CompilationUnit, list[Diagnostic]]:
    """Tokenize and parse; diagnostics are lexer errors followed by parse errors."""
    tokens, lex_diags = tokenize(source, source_name)
    unit, parse_diags = parse_unit(tokens, source.split("\n"), source_name)
    return unit, lex_diags + parse_diags
