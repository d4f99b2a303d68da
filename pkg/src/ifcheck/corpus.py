"""The bundled algebra interface corpus: ten sources and their expected transcripts."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass


class CorpusError(Exception):
    """Embedded corpus data failed its checksum."""


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    relative_path: str
    content: str
    expected_java8: str  # golden transcript file name
    expected_extended: str


# The two vector-space sources are the problematic ones; everything before
# them checks cleanly in both modes.
CLEAN_NAMES = (
    "AdditiveSemigroup",
    "MultiplicativeSemigroup",
    "AdditiveMonoid",
    "MultiplicativeMonoid",
    "AdditiveGroup",
    "CommutativeRing",
    "MultiplicativeGroup",
    "Field",
)

_SOURCES = {
    'AdditiveSemigroup': 'package algebra;\n\ninterface AdditiveSemigroup <T> {\n\n    T plus (T right);\n\n}\n',
    'MultiplicativeSemigroup': 'package algebra;\n\ninterface MultiplicativeSemigroup <T> {\n\n    T times (T right);\n\n}\n',
    'AdditiveMonoid': 'package algebra;\n\ninterface AdditiveMonoid <T>\n    extends AdditiveSemigroup <T> {\n\n    T getZero(); // the additive neutral element\n\n}\n',
    'MultiplicativeMonoid': 'package algebra;\n\ninterface MultiplicativeMonoid <T>\n    extends MultiplicativeSemigroup <T> {\n\n    T getOne(); // the multiplicative neutral element\n\n}\n',
    'AdditiveGroup': 'package algebra;\n\ninterface AdditiveGroup <T>\n    extends AdditiveMonoid <T> {\n\n    T getAddInv(); // the additive inverse element\n\n}\n',
    'CommutativeRing': 'package algebra;\n\ninterface CommutativeRing <T>\n    extends AdditiveGroup <T>,\n            MultiplicativeMonoid <T> {\n\n}\n',
    'MultiplicativeGroup': 'package algebra;\n\ninterface MultiplicativeGroup <T>\n    extends MultiplicativeMonoid <T> {\n\n    T getMultInv(); // the multiplicative inverse element\n\n}\n',
    'Field': 'package algebra;\n\ninterface Field <T>\n    extends AdditiveGroup <T>,\n            MultiplicativeGroup <T> {\n\n    T getMultInv() throws ArithmeticException; // div by Zero!\n\n}\n',
    'VectorSpace': 'package algebra;\n\ninterface VectorSpace     <Vector<Scalar>>\n    extends AdditiveGroup <Vector<Scalar>>,\n            Field                <Scalar> {\n\n    Vector<Scalar> timesScalar(Scalar s);\n\n}\n',
    'VectorSpaceAH': 'package algebra;\n\ninterface VectorSpaceAH   <Vector, Scalar>\n    extends AdditiveGroup <Vector>,\n            Field         <Scalar> {\n\n    Vector timesScalar (Scalar s);\n\n}\n',
}

_CHECKSUMS = {
    'AdditiveSemigroup': '668bf4eac607fb541eb694fb806110461676f438a01e7e311b118992adbbadf5',
    'MultiplicativeSemigroup': '2ea17794d9c5a572729f364be2d68115e70b139c860583a9130ff334f558ee8b',
    'AdditiveMonoid': 'be14598608b4852324171d259c659d028944300f199bd00544615998d8acbbdb',
    'MultiplicativeMonoid': 'f328b3b95a3be781e67c1b1aaa9400c58e25971a4531e2abac4486dfe9fef435',
    'AdditiveGroup': '3de137d67042d5898e01e0df413f3a59232939db4f4bc6bab6c8288fe8af9b5d',
    'CommutativeRing': 'a22e67140f8f34891965c97e11ca4e49d91fb67c1b705d1af38a8b6467912098',
    'MultiplicativeGroup': '1e86af49331843954d2074e93a8ab0da3e5c6bbce056f7d7a5a833deb6437d95',
    'Field': '3d02a0b8a3611ac01a5df92ea2583a0b163f15d8802f1a7a773d70f1fa502a61',
    'VectorSpace': 'eba8ee8ba727a328c7ca98910bcf818d4b763583691cfe5eedd952d80b4598b9',
    'VectorSpaceAH': '129c4eeac599833d177ec7166f939609ff8e20c62f25db3f784436d58b0dfaa5',
}


def load_corpus() -> list[CorpusEntry]:
    """Return the ten corpus entries in tower order, verifying checksums."""
    entries: list[CorpusEntry] = []
    for name, content in _SOURCES.items():
        digest = hashlib.sha256(content.encode("utf-8")).hexdigest()
        if digest != _CHECKSUMS[name]:
            raise CorpusError(f"embedded corpus entry {name} is corrupted")
        entries.append(
            CorpusEntry(
                name=name,
                relative_path=f"algebra/{name}.java",
                content=content,
                expected_java8=f"{name}.java8.txt",
                expected_extended=f"{name}.extended.txt",
            )
        )
    return entries


def clean_entries() -> list[CorpusEntry]:
    """The eight entries that form the ambient library for single-file checks."""
    return [e for e in load_corpus() if e.name in CLEAN_NAMES]
