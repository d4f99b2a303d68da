"""Sampled equational-law suites for the algebra tower.

Every comparison is exact; the shipped carriers (arbitrary-precision rationals
and integers) make each law a theorem, so any failure indicates a broken
operation. Reports are deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from .rational import ONE, ZERO, Rational
from .vector import VectorN

Sampler = Callable[[random.Random], Any]

LEVELS = ("semigroup", "monoid", "group", "commutative-ring", "field", "vector-space")

# Operation slots each structure level requires; everything else must stay unset.
_REQUIRED = {
    "semigroup": ("plus",),
    "monoid": ("plus", "zero"),
    "group": ("plus", "zero", "add_inv"),
    "commutative-ring": ("plus", "zero", "add_inv", "times", "one"),
    "field": ("plus", "zero", "add_inv", "times", "one", "mult_inv", "is_zero"),
    "vector-space": ("plus", "zero", "add_inv", "times_scalar", "scalar"),
}
_ALL_SLOTS = ("plus", "zero", "add_inv", "times", "one", "mult_inv", "is_zero", "times_scalar", "scalar")


@dataclass(frozen=True)
class StructureWitness:
    """A carrier sampler plus exactly the operation bundle its level requires."""

    level: str
    sample: Sampler
    plus: Callable | None = None
    zero: Any = None
    add_inv: Callable | None = None
    times: Callable | None = None
    one: Any = None
    mult_inv: Callable | None = None
    is_zero: Callable | None = None
    times_scalar: Callable | None = None
    scalar: "StructureWitness | None" = None

    def __post_init__(self) -> None:
        if self.level not in _REQUIRED:
            raise ValueError(f"unknown structure level: {self.level}")
        required = _REQUIRED[self.level]
        for slot in _ALL_SLOTS:
            value = getattr(self, slot)
            if slot in required and value is None:
                raise ValueError(f"{self.level} witness is missing operation {slot}")
            if slot not in required and value is not None:
                raise ValueError(f"{self.level} witness must not carry operation {slot}")


@dataclass(frozen=True)
class LawResult:
    name: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class LawReport:
    level: str
    samples: int
    seed: int
    results: tuple[LawResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            if r.passed:
                out.append(f"PASS {r.name}")
            else:
                out.append(f"FAIL {r.name}: {r.counterexample}")
        return out


def _nonzero(w: StructureWitness, rng: random.Random) -> Any:
    x = w.sample(rng)
    while w.is_zero(x):
        x = w.sample(rng)
    return x


def _laws_for(w: StructureWitness) -> list[tuple[str, Callable, Callable]]:
    """(name, draw(rng) -> args, check(*args) -> (left, right)) per law."""
    laws: list[tuple[str, Callable, Callable]] = []
    if w.level == "vector-space":
        s = w.scalar
        laws = [
            ("associativity of plus",
             lambda rng: (w.sample(rng), w.sample(rng), w.sample(rng)),
             lambda u, v, x: (w.plus(w.plus(u, v), x), w.plus(u, w.plus(v, x)))),
            ("commutativity of plus",
             lambda rng: (w.sample(rng), w.sample(rng)),
             lambda u, v: (w.plus(u, v), w.plus(v, u))),
            ("zero identity",
             lambda rng: (w.sample(rng),),
             lambda v: ((w.plus(v, w.zero), w.plus(w.zero, v)), (v, v))),
            ("additive inverse",
             lambda rng: (w.sample(rng),),
             lambda v: (w.plus(v, w.add_inv(v)), w.zero)),
            ("scalar distributivity over scalar sums",
             lambda rng: (s.sample(rng), s.sample(rng), w.sample(rng)),
             lambda a, b, v: (w.times_scalar(v, s.plus(a, b)),
                              w.plus(w.times_scalar(v, a), w.times_scalar(v, b)))),
            ("scalar distributivity over vector sums",
             lambda rng: (s.sample(rng), w.sample(rng), w.sample(rng)),
             lambda a, u, v: (w.times_scalar(w.plus(u, v), a),
                              w.plus(w.times_scalar(u, a), w.times_scalar(v, a)))),
            ("compatibility of scalar multiplication",
             lambda rng: (s.sample(rng), s.sample(rng), w.sample(rng)),
             lambda a, b, v: (w.times_scalar(v, s.times(a, b)),
                              w.times_scalar(w.times_scalar(v, b), a))),
            ("unit scalar",
             lambda rng: (w.sample(rng),),
             lambda v: (w.times_scalar(v, s.one), v)),
            ("zero scalar absorption",
             lambda rng: (w.sample(rng),),
             lambda v: (w.times_scalar(v, s.zero), w.zero)),
            ("zero vector absorption",
             lambda rng: (s.sample(rng),),
             lambda a: (w.times_scalar(w.zero, a), w.zero)),
            ("negated scalar compatibility",
             lambda rng: (s.sample(rng), w.sample(rng)),
             lambda a, v: (w.times_scalar(v, s.add_inv(a)), w.add_inv(w.times_scalar(v, a)))),
            ("negated vector compatibility",
             lambda rng: (s.sample(rng), w.sample(rng)),
             lambda a, v: (w.times_scalar(w.add_inv(v), a), w.add_inv(w.times_scalar(v, a)))),
        ]
        return laws

    rank = LEVELS.index(w.level)
    laws.append(
        ("associativity of plus",
         lambda rng: (w.sample(rng), w.sample(rng), w.sample(rng)),
         lambda x, y, z: (w.plus(w.plus(x, y), z), w.plus(x, w.plus(y, z)))))
    laws.append(
        ("commutativity of plus",
         lambda rng: (w.sample(rng), w.sample(rng)),
         lambda x, y: (w.plus(x, y), w.plus(y, x))))
    if rank >= LEVELS.index("monoid"):
        laws.append(
            ("zero identity",
             lambda rng: (w.sample(rng),),
             lambda x: ((w.plus(x, w.zero), w.plus(w.zero, x)), (x, x))))
    if rank >= LEVELS.index("group"):
        laws.append(
            ("additive inverse",
             lambda rng: (w.sample(rng),),
             lambda x: (w.plus(x, w.add_inv(x)), w.zero)))
    if rank >= LEVELS.index("commutative-ring"):
        laws.append(
            ("associativity of times",
             lambda rng: (w.sample(rng), w.sample(rng), w.sample(rng)),
             lambda x, y, z: (w.times(w.times(x, y), z), w.times(x, w.times(y, z)))))
        laws.append(
            ("commutativity of times",
             lambda rng: (w.sample(rng), w.sample(rng)),
             lambda x, y: (w.times(x, y), w.times(y, x))))
        laws.append(
            ("one identity",
             lambda rng: (w.sample(rng),),
             lambda x: ((w.times(x, w.one), w.times(w.one, x)), (x, x))))
        laws.append(
            ("distributivity of times over plus",
             lambda rng: (w.sample(rng), w.sample(rng), w.sample(rng)),
             lambda x, y, z: ((w.times(x, w.plus(y, z)), w.times(w.plus(y, z), x)),
                              (w.plus(w.times(x, y), w.times(x, z)),
                               w.plus(w.times(y, x), w.times(z, x))))))
    if rank >= LEVELS.index("field"):
        laws.append(
            ("multiplicative inverse on nonzero elements",
             lambda rng: (_nonzero(w, rng),),
             lambda x: (w.times(x, w.mult_inv(x)), w.one)))
    return laws


def check_laws(witness: StructureWitness, samples: int, seed: int) -> LawReport:
    """Draw `samples` tuples per law and compare both sides exactly."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    results: list[LawResult] = []
    for name, draw, evaluate in _laws_for(witness):
        failure = None
        for _ in range(samples):
            args = draw(rng)
            left, right = evaluate(*args)
            if left != right:
                shown = ", ".join(repr(a) for a in args)
                failure = f"args=({shown}); left={left!r}; right={right!r}"
                break
        results.append(LawResult(name, failure is None, failure))
    return LawReport(witness.level, samples, seed, tuple(results))


# shipped witnesses


def sample_rational(rng: random.Random) -> Rational:
    """Numerator uniform in [-100, 100], denominator uniform in [1, 100], normalized."""
    return Rational(rng.randint(-100, 100), rng.randint(1, 100))


def rational_field_witness() -> StructureWitness:
    return StructureWitness(
        level="field",
        sample=sample_rational,
        plus=Rational.plus,
        zero=ZERO,
        add_inv=Rational.add_inv,
        times=Rational.times,
        one=ONE,
        mult_inv=Rational.mult_inv,
        is_zero=Rational.is_zero,
    )


def integer_ring_witness() -> StructureWitness:
    return StructureWitness(
        level="commutative-ring",
        sample=lambda rng: rng.randint(-100, 100),
        plus=lambda a, b: a + b,
        zero=0,
        add_inv=lambda a: -a,
        times=lambda a, b: a * b,
        one=1,
    )


def vector_space_witness(dimension: int = 3) -> StructureWitness:
    def sample(rng: random.Random) -> VectorN:
        return VectorN(tuple(sample_rational(rng) for _ in range(dimension)))

    return StructureWitness(
        level="vector-space",
        sample=sample,
        plus=VectorN.plus,
        zero=VectorN.zero(dimension),
        add_inv=VectorN.add_inv,
        times_scalar=VectorN.times_scalar,
        scalar=rational_field_witness(),
    )


def at_level(witness: StructureWitness, level: str) -> StructureWitness:
    """Rerun a stronger witness at a weaker level (e.g. the field as a group)."""
    kept = {slot: getattr(witness, slot) for slot in _REQUIRED[level]}
    return StructureWitness(level=level, sample=witness.sample, **kept)
