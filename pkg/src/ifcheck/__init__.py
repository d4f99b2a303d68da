"""Checker for a miniature generic-interface language.

java8 mode reproduces the multiple-instantiation restriction of Java 8's
interface system bit for bit on the bundled corpus; extended mode accepts
multiple instantiations of an inherited generic interface and merges the
member tables. The algebra subpackage realizes the corpus interfaces
executably, with property suites for their equational laws.
"""

from .corpus import CorpusEntry, CorpusError, load_corpus
from .diagnostics import Diagnostic, Transcript, compare_golden, render_transcript
from .driver import RunResult, check_files, check_sources, run_corpus_entry, verify_goldens
from .lexer import SourcePos, Token, TokenKind, tokenize
from .nodes import CompilationUnit, InterfaceDecl, MethodSig, TypeRef, render_unit
from .parser import parse_source, parse_unit
from .semantics import (
    CheckReport,
    Hierarchy,
    Instantiation,
    InstantiationMap,
    MemberSignature,
    Substitution,
    build_hierarchy,
    check,
    check_extended,
    check_java8,
    check_overrides,
    collect_instantiations,
    compose,
    merge_members,
    substitute,
)

__version__ = "0.1.0"
