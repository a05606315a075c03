"""Numerical semigroups, their ideals, and maximum sparse ideals.

A numerical semigroup ``S`` is stored by its finite gap set; everything at or
beyond the conductor is in ``S``. Ideals are stored by their finite
complement ``S \\ I``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator

from .errors import LeaderHasGapPair, NotAnIdeal, NotClosed, NotCofinite, NotMaxSparse


class NumericalSemigroup:
    def __init__(self, gaps: Iterable[int]):
        gap_set = frozenset(int(x) for x in gaps)
        if any(x <= 0 for x in gap_set):
            raise NotClosed("gaps must be positive integers")
        for x in gap_set:
            for a in range(1, x):
                if a not in gap_set and (x - a) not in gap_set:
                    raise NotClosed(f"{a} + {x - a} = {x} but {x} is listed as a gap")
        self.gaps = tuple(sorted(gap_set))
        self._gap_set = gap_set

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        return cls(gaps)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        gens = sorted({int(g) for g in gens if int(g) > 0})
        if not gens:
            raise NotCofinite("no positive generators")
        d = 0
        for g in gens:
            d = gcd(d, g)
        if d != 1:
            raise NotCofinite(f"generators have gcd {d}")
        m = gens[0]
        # sieve until m consecutive members appear; after that everything is reachable
        reach = [True]
        run = 1
        n = 0
        while run < m:
            n += 1
            ok = any(n >= g and reach[n - g] for g in gens)
            reach.append(ok)
            run = run + 1 if ok else 0
        return cls(i for i, ok in enumerate(reach) if not ok)

    # -- basic invariants -------------------------------------------------

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gap_set

    def is_gap(self, n: int) -> bool:
        return n in self._gap_set

    @property
    def multiplicity(self) -> int:
        return next(n for n in range(1, self.conductor + 2) if n in self)

    def elements(self, bound: int) -> list[int]:
        """Nongaps in ``[0, bound]``."""
        return [n for n in range(bound + 1) if n in self]

    def element(self, i: int) -> int:
        """lambda_i, the i-th nongap (lambda_0 = 0)."""
        if i < 0:
            raise IndexError(i)
        below = self.conductor - self.genus  # nongaps in [0, c)
        if i >= below:
            return self.conductor + (i - below)
        return self.elements(self.conductor)[i]

    def index_of(self, value: int) -> int:
        if value not in self:
            raise ValueError(f"{value} is a gap")
        return value - sum(1 for g in self.gaps if g < value)

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        m = self.multiplicity
        out = []
        for n in range(1, self.conductor + m + 1):
            if n in self and not any(a in self and (n - a) in self for a in range(1, n)):
                out.append(n)
        return tuple(out)

    def to_json(self) -> dict:
        return {"gaps": list(self.gaps)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumericalSemigroup) and self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        shown = ", ".join(str(x) for x in self.elements(self.conductor + 2))
        return f"NumericalSemigroup({{{shown}, ...}}, g={self.genus})"


def sg_from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_gaps(gaps)


def sg_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


# -- D(i) and G(i) ----------------------------------------------------------

@dataclass(frozen=True)
class DivisorProfile:
    index: int
    value: int
    divisors: tuple[int, ...]  # D(i) = S n (lambda_i - S)
    gap_pairs: int             # G(i), unordered pairs a <= b of gaps with a + b = lambda_i


def gap_pair_count(S: NumericalSemigroup, value: int) -> int:
    return sum(1 for a in S.gaps if 2 * a <= value and S.is_gap(value - a))


def profile(S: NumericalSemigroup, i: int) -> DivisorProfile:
    lam = S.element(i)
    divs = tuple(x for x in range(lam + 1) if x in S and (lam - x) in S)
    return DivisorProfile(i, lam, divs, gap_pair_count(S, lam))


# -- ideals -----------------------------------------------------------------

@dataclass(frozen=True)
class SemigroupIdeal:
    parent: NumericalSemigroup
    complement: tuple[int, ...]  # S \ I
    frobenius: int
    is_proper: bool
    is_max_sparse: bool
    leader: int | None
    characterization_holds: bool = field(default=True)

    @property
    def bound(self) -> int:
        """2g - 1 + #(S \\ I)."""
        return 2 * self.parent.genus - 1 + len(self.complement)

    def __contains__(self, n: int) -> bool:
        return n in self.parent and n not in self.complement


def _check_ideal(S: NumericalSemigroup, comp: frozenset[int]) -> None:
    for c in comp:
        if c not in S:
            raise NotAnIdeal(f"{c} is not an element of the semigroup")
        for s in range(1, c + 1):
            if s in S and (c - s) in S and (c - s) not in comp:
                raise NotAnIdeal(f"{c - s} in I but {c - s} + {s} = {c} is not")


def ideal_analyze(S: NumericalSemigroup, complement: Iterable[int]) -> SemigroupIdeal:
    comp = frozenset(int(x) for x in complement)
    _check_ideal(S, comp)
    outside = set(S.gaps) | comp
    frob = max(outside) if outside else -1
    proper = bool(comp)
    max_sparse = proper and frob == 2 * S.genus - 1 + len(comp)
    leader = frob if max_sparse else None
    holds = True
    if max_sparse:
        prof = profile(S, S.index_of(frob))
        holds = prof.gap_pairs == 0 and frozenset(prof.divisors) == comp
    return SemigroupIdeal(S, tuple(sorted(comp)), frob, proper, max_sparse, leader, holds)


def max_sparse_from_leader(S: NumericalSemigroup, i: int) -> SemigroupIdeal:
    """The ideal S \\ D(i); requires lambda_i > 0 and G(i) = 0."""
    prof = profile(S, i)
    if prof.value == 0:
        raise ValueError("the leader must be a nonzero nongap")
    if prof.gap_pairs:
        raise LeaderHasGapPair(f"{prof.value} is a sum of two gaps")
    return ideal_analyze(S, prof.divisors)


def leaders(S: NumericalSemigroup, bound: int) -> list[int]:
    """Nonzero nongaps up to ``bound`` that are not a sum of two gaps."""
    return [x for x in range(1, bound + 1) if x in S and gap_pair_count(S, x) == 0]


@dataclass(frozen=True)
class InclusionReport:
    contains: bool            # I' contains I
    complement_subset: bool   # S\I' subset of S\I
    divisor_subset: bool      # D(i') subset of D(i)
    leader_difference: bool   # lambda_i - lambda_i' in S
    size_difference: bool     # #(S\I) - #(S\I') in S

    @property
    def values(self) -> tuple[bool, ...]:
        return (self.contains, self.complement_subset, self.divisor_subset,
                self.leader_difference, self.size_difference)

    @property
    def consistent(self) -> bool:
        return len(set(self.values)) == 1


def incl_equivalences(S: NumericalSemigroup, I: SemigroupIdeal, I2: SemigroupIdeal) -> InclusionReport:
    for J in (I, I2):
        if not J.is_max_sparse:
            raise NotMaxSparse("both ideals must be proper and maximum sparse")
    window = max(I.frobenius, I2.frobenius) + S.conductor + 1
    contains = all(x in I2 for x in range(window + 1) if x in I)
    comp_sub = set(I2.complement) <= set(I.complement)
    d1 = profile(S, S.index_of(I.leader))
    d2 = profile(S, S.index_of(I2.leader))
    div_sub = set(d2.divisors) <= set(d1.divisors)
    lead = (I.leader - I2.leader) in S
    size = (len(I.complement) - len(I2.complement)) in S
    return InclusionReport(contains, comp_sub, div_sub, lead, size)


def clifford_dyck_check(S: NumericalSemigroup, a: int) -> tuple[bool, bool]:
    """(#nongaps in [1,a] <= a/2, #gaps in [a+1,2g] <= (2g-a)/2)."""
    g = S.genus
    if not 1 <= a <= 2 * g:
        raise ValueError(f"a must lie in [1, {2 * g}]")
    nongaps = sum(1 for x in range(1, a + 1) if x in S)
    gaps = sum(1 for x in range(a + 1, 2 * g + 1) if S.is_gap(x))
    return 2 * nongaps <= a, 2 * gaps <= 2 * g - a


# -- exhaustive enumeration -------------------------------------------------

def enumerate_semigroups(max_genus: int) -> Iterator[NumericalSemigroup]:
    """All numerical semigroups of genus <= max_genus (gap-removal tree)."""
    stack = [NumericalSemigroup(())]
    while stack:
        S = stack.pop()
        yield S
        if S.genus == max_genus:
            continue
        for x in S.minimal_generators:
            if x > S.frobenius:
                stack.append(NumericalSemigroup(S.gaps + (x,)))


def enumerate_ideals(S: NumericalSemigroup, max_complement: int) -> Iterator[frozenset[int]]:
    """Complements S \\ I of all ideals with #(S \\ I) <= max_complement.

    Tree: the parent of an ideal with complement C is I u {max C}.
    """
    m = S.multiplicity
    stack: list[frozenset[int]] = [frozenset()]
    while stack:
        comp = stack.pop()
        yield comp
        if len(comp) == max_complement:
            continue
        top = max(comp) if comp else -1
        outside = set(S.gaps) | comp
        frob = max(outside) if outside else -1
        for x in range(top + 1, frob + m + 1):
            if x not in S or x in comp:
                continue
            # minimal generator of I: no x - s in I for s in S, s > 0
            if any(s in S and (x - s) in S and (x - s) not in comp for s in range(1, x + 1)):
                continue
            stack.append(comp | {x})
