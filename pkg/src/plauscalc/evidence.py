"""Bodies of evidence over a finite frame, their combination, and the
translation into credal sets.

Focal sets are bitmasks over the ordered frame, so set algebra is exact and
iteration order deterministic.  Masses are eps-field values: every published
example uses plain rationals, but infinitesimal masses are legal for
uniformity with the rest of the system.

Two combination routes are provided and deliberately kept comparable:

* :func:`dempster_combine` -- random-set intersection conditioned on being
  nonempty, dividing away conflict mass.
* translation via :func:`mass_to_credal` followed by
  :func:`~plauscalc.credal.combine_laplace`.

:func:`run_gelman` builds the boxer/wrestler/coin scenario on which the two
routes famously disagree and reports both answers with exact envelopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .credal import CredalSet, ExtDist, OutcomeSpace, combine_laplace, envelopes
from .epsnum import ONE, ZERO, EpsRational, const

__all__ = [
    "TotalConflictError",
    "SelectionBudgetError",
    "Frame",
    "MassFunction",
    "dempster_combine",
    "bel_pl",
    "mass_to_credal",
    "GelmanReport",
    "run_gelman",
]

Prob = Union[int, Fraction, EpsRational]
SetLike = Union[int, Iterable[str]]


class TotalConflictError(ValueError):
    """Dempster combination with conflict mass exactly 1."""


class SelectionBudgetError(ValueError):
    """Credal translation would enumerate too many selection functions."""


def _as_eps(x: Prob) -> EpsRational:
    if isinstance(x, EpsRational):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    raise TypeError(f"not an exact mass value: {x!r}")


@dataclass(frozen=True)
class Frame:
    """Finite ordered frame of mutually exclusive outcomes."""

    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("frame must be nonempty")
        if len(set(atoms)) != len(atoms):
            raise ValueError("atom names must be unique")
        object.__setattr__(self, "atoms", atoms)

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def mask_of(self, subset: SetLike) -> int:
        if isinstance(subset, int):
            if not 0 <= subset <= self.full_mask:
                raise KeyError(f"mask {subset} out of range")
            return subset
        mask = 0
        for name in subset:
            try:
                mask |= 1 << self.atoms.index(name)
            except ValueError:
                raise KeyError(f"unknown atom {name!r}") from None
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.atoms) if mask >> i & 1)

    def atom_indices(self, mask: int) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if mask >> i & 1)

    def fmt_set(self, mask: int) -> str:
        return "{" + ",".join(self.names_of(mask)) + "}"

    def outcome_space(self) -> OutcomeSpace:
        return OutcomeSpace(self.atoms)


@dataclass(frozen=True)
class MassFunction:
    """Body of evidence: positive masses on nonempty subsets, summing to 1."""

    frame: Frame
    focal: tuple[tuple[int, EpsRational], ...]  # sorted by mask

    def __init__(self, frame: Frame, masses: Mapping[SetLike, Prob]):
        acc: dict[int, EpsRational] = {}
        for subset, mass in masses.items():
            mask = frame.mask_of(subset)
            acc[mask] = acc.get(mask, ZERO) + _as_eps(mass)
        if 0 in acc:
            raise ValueError("the empty set cannot carry mass")
        total = ZERO
        for mask, m in acc.items():
            if m.sign() <= 0:
                raise ValueError(f"mass of {frame.fmt_set(mask)} must be positive, got {m}")
            total = total + m
        if total != ONE:
            raise ValueError(f"masses sum to {total}, expected 1")
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "focal", tuple(sorted(acc.items())))

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        return cls(frame, {frame.full_mask: ONE})

    def mass(self, subset: SetLike) -> EpsRational:
        mask = self.frame.mask_of(subset)
        for m, v in self.focal:
            if m == mask:
                return v
        return ZERO

    @property
    def is_bayesian(self) -> bool:
        return all(mask & (mask - 1) == 0 for mask, _ in self.focal)

    def __str__(self) -> str:
        inner = "; ".join(f"{self.frame.fmt_set(m)}: {v}" for m, v in self.focal)
        return f"[{inner}]"


def dempster_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Random-set intersection conditioned on non-emptiness, exactly.

    Conflict mass K is divided away; K = 1 raises :class:`TotalConflictError`.
    """
    if m1.frame.atoms != m2.frame.atoms:
        raise ValueError("mass functions must share the frame")
    raw: dict[int, EpsRational] = {}
    conflict = ZERO
    for a, ma in m1.focal:
        for b, mb in m2.focal:
            c = a & b
            w = ma * mb
            if c == 0:
                conflict = conflict + w
            else:
                raw[c] = raw.get(c, ZERO) + w
    if conflict == ONE:
        raise TotalConflictError("total conflict")
    scale = ONE - conflict
    return MassFunction(m1.frame, {mask: w / scale for mask, w in raw.items()})


def bel_pl(m: MassFunction, event: SetLike) -> tuple[EpsRational, EpsRational]:
    """Belief and plausibility of the event: the mass certainly inside it and
    the mass not certainly outside it."""
    ev = m.frame.mask_of(event)
    bel = ZERO
    pl = ZERO
    for mask, v in m.focal:
        if mask & ~ev == 0:
            bel = bel + v
        if mask & ev:
            pl = pl + v
    return bel, pl


def mass_to_credal(m: MassFunction, budget: int = 10**6) -> CredalSet:
    """All distributions obtained by sending each focal mass to one of its atoms.

    One distribution per selection function, duplicates removed; these are the
    extreme points of the credal set the body of evidence describes, and their
    envelopes reproduce belief and plausibility.
    """
    count = 1
    for mask, _ in m.focal:
        count *= bin(mask).count("1")
        if count > budget:
            raise SelectionBudgetError(
                f"credal translation needs more than {budget} selection functions"
                f" (at least {count})"
            )
    space = m.frame.outcome_space()
    n = m.frame.size
    seen: dict[tuple[EpsRational, ...], None] = {}
    choices = [m.frame.atom_indices(mask) for mask, _ in m.focal]

    def build(i: int, acc: list[EpsRational]) -> None:
        if i == len(choices):
            seen.setdefault(tuple(acc), None)
            return
        _, mass = m.focal[i]
        for atom in choices[i]:
            nxt = list(acc)
            nxt[atom] = nxt[atom] + mass
            build(i + 1, nxt)

    build(0, [ZERO] * n)
    dists = [ExtDist(space, probs) for probs in seen]
    return CredalSet(space, dists)


# ---------------------------------------------------------------------------
# The boxer / wrestler / coin comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GelmanReport:
    """Both combination routes on the boxer/wrestler/coin evidence.

    Events: B = the boxer wins, C = the coin lands heads; atoms name the four
    conjunctions.  The three bodies of evidence are total ignorance about B,
    the fair coin, and a report that B and C had the same outcome.
    """

    frame: Frame
    bodies: dict[str, MassFunction]
    dempster: MassFunction
    robust: CredalSet
    symbol_masses: dict[str, EpsRational]  # mass on {BC} under each body
    dempster_envelopes: dict[str, tuple[Fraction, Fraction]]
    robust_envelopes: dict[str, tuple[Fraction, Fraction]]

    def format_lines(self) -> list[str]:
        f = self.frame
        lines = [f"frame: {', '.join(f.atoms)}"]
        for name in ("m1", "m2", "m3"):
            lines.append(f"{name} = {self.bodies[name]}")
        lines.append(f"dempster: m1 (x) m2 (x) m3 = {self.dempster}")
        lines.append("robust (credal translation + componentwise product):")
        for d in self.robust.dists:
            lines.append(f"  member {d}")
        lines.append("mass on {BC}: " + ", ".join(
            f"{k} -> {v}" for k, v in self.symbol_masses.items()
        ))
        for event in ("B", "C"):
            dl, du = self.dempster_envelopes[event]
            rl, ru = self.robust_envelopes[event]
            lines.append(
                f"event {event}: dempster envelopes ({dl}, {du});"
                f" robust envelopes ({rl}, {ru})"
            )
        return lines


def run_gelman() -> GelmanReport:
    """Build the scenario exactly and evaluate both combination routes."""
    frame = Frame(("BC", "BnC", "nBC", "nBnC"))
    half = Fraction(1, 2)
    m1 = MassFunction.vacuous(frame)
    m2 = MassFunction(frame, {("BC", "nBC"): half, ("BnC", "nBnC"): half})
    m3 = MassFunction(frame, {("BC", "nBnC"): 1})
    bodies = {"m1": m1, "m2": m2, "m3": m3}

    combined = dempster_combine(dempster_combine(m1, m2), m3)

    robust = combine_laplace(
        combine_laplace(mass_to_credal(m1), mass_to_credal(m2)), mass_to_credal(m3)
    )

    bc = ("BC",)
    symbol_masses = {
        "m1": m1.mass(bc),
        "m2": m2.mass(bc),
        "m3": m3.mass(bc),
        "m": combined.mass(bc),
    }

    events = {"B": ("BC", "BnC"), "C": ("BC", "nBC")}
    dempster_env = {}
    robust_env = {}
    for name, atoms in events.items():
        bel, pl = bel_pl(combined, atoms)
        dempster_env[name] = (bel.standard_part(), pl.standard_part())
        robust_env[name] = envelopes(robust, atoms)

    return GelmanReport(
        frame=frame,
        bodies=bodies,
        dempster=combined,
        robust=robust,
        symbol_masses=symbol_masses,
        dempster_envelopes=dempster_env,
        robust_envelopes=robust_env,
    )
