"""Fixed-dimension vectors of rationals with componentwise field operations."""

from __future__ import annotations

from dataclasses import dataclass

from .rational import Rational, ZERO


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True, repr=False)
class VectorN:
    components: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise DimensionMismatch("vectors must have at least one component")

    @property
    def dimension(self) -> int:
        return len(self.components)

    @classmethod
    def zero(cls, dimension: int) -> VectorN:
        return cls((ZERO,) * dimension)

    def plus(self, right: VectorN) -> VectorN:
        if self.dimension != right.dimension:
            raise DimensionMismatch(f"dimensions {self.dimension} and {right.dimension} differ")
        return VectorN(tuple(a.plus(b) for a, b in zip(self.components, right.components)))

    def add_inv(self) -> VectorN:
        return VectorN(tuple(c.add_inv() for c in self.components))

    def times_scalar(self, s: Rational) -> VectorN:
        return VectorN(tuple(c.times(s) for c in self.components))

    def __repr__(self) -> str:
        return "(" + ", ".join(repr(c) for c in self.components) + ")"
