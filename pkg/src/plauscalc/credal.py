"""Families of exact extended-probability distributions over a finite space.

A credal set here is a finite *indexed family* of distributions (its extreme
points), not a convex body: the comparison order, conditioning, combination
and decomposition below are all componentwise, one component per index.
Probabilities are exact eps-field values, so conditioning on an event of
infinitesimal probability is ordinary division rather than a failure case.

The vector view: event plausibilities form one eps-field value per index,
ordered componentwise, which makes the family a partially ordered product
ring.  Products of nonzero vectors can vanish (zero divisors), no nonzero
vector squares to zero, and every vector splits uniquely as
``lower + profile * spread`` with precise (all-components-equal) lower bound
and spread and a profile vector spanning exactly [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .epsnum import ONE, ZERO, EpsRational, const

__all__ = [
    "ImpossibleEventError",
    "IncompatibleCredalError",
    "OutcomeSpace",
    "ExtDist",
    "CredalSet",
    "PlausVector",
    "ComparisonResult",
    "event_plausibility",
    "more_plausible",
    "condition",
    "combine_laplace",
    "envelopes",
    "Decomposition",
    "decompose",
]

Prob = Union[int, Fraction, EpsRational]


class ImpossibleEventError(ValueError):
    """Conditioning on an event that every component rules out exactly."""


class IncompatibleCredalError(ValueError):
    """Combination annihilated every index pair."""


def _as_eps(x: Prob) -> EpsRational:
    if isinstance(x, EpsRational):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    raise TypeError(f"not an exact probability value: {x!r}")


@dataclass(frozen=True)
class OutcomeSpace:
    """Finite ordered set of atomic outcomes."""

    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("outcome space must be nonempty")
        if len(set(atoms)) != len(atoms):
            raise ValueError("outcome names must be unique")
        object.__setattr__(self, "atoms", atoms)

    def index(self, atom: str) -> int:
        try:
            return self.atoms.index(atom)
        except ValueError:
            raise KeyError(f"unknown atom {atom!r}") from None

    def event(self, atoms: Iterable[str]) -> frozenset[str]:
        ev = frozenset(atoms)
        for a in ev:
            self.index(a)
        return ev


@dataclass(frozen=True)
class ExtDist:
    """One exact distribution: nonnegative values summing to exactly 1."""

    space: OutcomeSpace
    probs: tuple[EpsRational, ...]

    def __init__(self, space: OutcomeSpace, probs):
        if isinstance(probs, Mapping):
            missing = set(space.atoms) - set(probs)
            extra = set(probs) - set(space.atoms)
            if missing or extra:
                raise ValueError(f"distribution atoms mismatch: missing {sorted(missing)}, extra {sorted(extra)}")
            values = tuple(_as_eps(probs[a]) for a in space.atoms)
        else:
            values = tuple(_as_eps(p) for p in probs)
            if len(values) != len(space.atoms):
                raise ValueError("wrong number of probabilities")
        total = ZERO
        for a, p in zip(space.atoms, values):
            if p.sign() < 0:
                raise ValueError(f"negative probability for {a!r}: {p}")
            total = total + p
        if total != ONE:
            raise ValueError(f"probabilities sum to {total}, expected 1")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "probs", values)

    def prob(self, atom: str) -> EpsRational:
        return self.probs[self.space.index(atom)]

    def event_prob(self, event: Iterable[str]) -> EpsRational:
        ev = self.space.event(event)
        total = ZERO
        for a, p in zip(self.space.atoms, self.probs):
            if a in ev:
                total = total + p
        return total

    def __str__(self) -> str:
        inner = ", ".join(f"{a}: {p}" for a, p in zip(self.space.atoms, self.probs))
        return "{" + inner + "}"


@dataclass(frozen=True)
class CredalSet:
    """Nonempty indexed family of distributions over one outcome space."""

    space: OutcomeSpace
    dists: tuple[ExtDist, ...]

    def __init__(self, space: OutcomeSpace, dists: Iterable[ExtDist]):
        dists = tuple(dists)
        if not dists:
            raise ValueError("credal set must contain at least one distribution")
        for d in dists:
            if d.space.atoms != space.atoms:
                raise ValueError("all distributions must share the outcome space")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "dists", dists)

    def __len__(self) -> int:
        return len(self.dists)

    @classmethod
    def of(cls, dists: Iterable[ExtDist]) -> "CredalSet":
        dists = tuple(dists)
        if not dists:
            raise ValueError("credal set must contain at least one distribution")
        return cls(dists[0].space, dists)


class PlausVector:
    """One eps-field value per index of a credal family, ordered componentwise."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Prob]):
        comps = tuple(_as_eps(c) for c in components)
        if not comps:
            raise ValueError("empty plausibility vector")
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):
        raise AttributeError("PlausVector is immutable")

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> EpsRational:
        return self.components[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, PlausVector):
            return self.components == other.components
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components)

    @classmethod
    def constant(cls, value: Prob, size: int) -> "PlausVector":
        return cls([_as_eps(value)] * size)

    def _zip(self, other: Union["PlausVector", Prob]):
        if isinstance(other, PlausVector):
            if len(other) != len(self):
                raise ValueError("length mismatch")
            return zip(self.components, other.components)
        v = _as_eps(other)
        return ((c, v) for c in self.components)

    def __add__(self, other) -> "PlausVector":
        return PlausVector([a + b for a, b in self._zip(other)])

    __radd__ = __add__

    def __sub__(self, other) -> "PlausVector":
        return PlausVector([a - b for a, b in self._zip(other)])

    def __mul__(self, other) -> "PlausVector":
        return PlausVector([a * b for a, b in self._zip(other)])

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PlausVector":
        return PlausVector([a / b for a, b in self._zip(other)])

    def min(self) -> EpsRational:
        return min(self.components)

    def max(self) -> EpsRational:
        return max(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def strictly_above(self, other: "PlausVector") -> bool:
        return all(a > b for a, b in self._zip(other))

    def strictly_below(self, other: "PlausVector") -> bool:
        return all(a < b for a, b in self._zip(other))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def event_plausibility(c: CredalSet, event: Iterable[str]) -> PlausVector:
    """Per-index probability of the event."""
    ev = c.space.event(event)
    return PlausVector([d.event_prob(ev) for d in c.dists])


@dataclass(frozen=True)
class ComparisonResult:
    verdict: str  # yes | no | incomparable
    equal: bool = False

    def __str__(self) -> str:
        return f"{self.verdict} (equal)" if self.equal else self.verdict


def more_plausible(c: CredalSet, a: Iterable[str], b: Iterable[str]) -> ComparisonResult:
    """Is event ``a`` more plausible than ``b``?  Requires strict agreement of
    every component; equality is reported as incomparable with a flag."""
    pa = event_plausibility(c, a)
    pb = event_plausibility(c, b)
    if pa == pb:
        return ComparisonResult("incomparable", equal=True)
    if pa.strictly_above(pb):
        return ComparisonResult("yes")
    if pa.strictly_below(pb):
        return ComparisonResult("no")
    return ComparisonResult("incomparable")


def condition(c: CredalSet, event: Iterable[str]) -> CredalSet:
    """Per-component exact conditioning on the event.

    Components giving the event probability exactly zero are eliminated as
    impossible candidate worlds; infinitesimal probabilities condition
    normally.  Raises when every component is eliminated.
    """
    ev = c.space.event(event)
    kept_atoms = tuple(a for a in c.space.atoms if a in ev)
    if not kept_atoms:
        raise ImpossibleEventError("conditioning on impossible event: empty event")
    new_space = OutcomeSpace(kept_atoms)
    survivors = []
    for d in c.dists:
        pe = d.event_prob(ev)
        if pe.is_zero:
            continue
        survivors.append(ExtDist(new_space, [d.prob(a) / pe for a in kept_atoms]))
    if not survivors:
        raise ImpossibleEventError("conditioning on impossible event")
    return CredalSet(new_space, survivors)


def combine_laplace(c1: CredalSet, c2: CredalSet) -> CredalSet:
    """Pairwise atomwise product of members, exactly renormalized.

    The result family is indexed by the lexicographic Cartesian product of
    the two index sets; index pairs whose product annihilates are dropped.
    """
    if c1.space.atoms != c2.space.atoms:
        raise ValueError("credal sets must share the outcome space")
    out = []
    for d1 in c1.dists:
        for d2 in c2.dists:
            weights = [p * q for p, q in zip(d1.probs, d2.probs)]
            total = ZERO
            for w in weights:
                total = total + w
            if total.is_zero:
                continue
            out.append(ExtDist(c1.space, [w / total for w in weights]))
    if not out:
        raise IncompatibleCredalError("incompatible credal sets")
    return CredalSet(c1.space, out)


def envelopes(c: CredalSet, event: Iterable[str]) -> tuple[Fraction, Fraction]:
    """Lower and upper standard parts of the event probability."""
    vec = event_plausibility(c, event)
    parts = [p.standard_part() for p in vec]
    return min(parts), max(parts)


@dataclass(frozen=True)
class Decomposition:
    """p = lower + profile * spread, componentwise.

    ``lower`` and ``spread`` are precise (all-components-equal) values: the
    family's lower probability and the width up to its upper probability.
    ``profile`` is None exactly when the vector is precise; otherwise it
    spans [0, 1] and is incomparable to every strictly interior constant.
    """

    lower: EpsRational
    spread: EpsRational
    profile: Optional[PlausVector]

    @property
    def upper(self) -> EpsRational:
        return self.lower + self.spread


def decompose(p: PlausVector) -> Decomposition:
    """Split a plausibility vector into precise bounds and a profile."""
    s = p.min()
    t = p.max() - s
    if t.is_zero:
        return Decomposition(lower=s, spread=t, profile=None)
    return Decomposition(lower=s, spread=t, profile=(p - s) / t)
