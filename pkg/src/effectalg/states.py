"""Additive maps into the rational unit interval, the unique extension of
an additive map to a state on the unitization, and the ideals probe.

All arithmetic is exact (fractions.Fraction); there is no tolerance
anywhere.  The interval itself is never materialized as an algebra: a
sum of values is "defined" exactly when it stays at or below 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .core import (
    UNDEF,
    FiniteEa,
    FiniteGea,
    StructureError,
    ValidationReport,
    Violation,
    derive_order,
)
from .morphisms import enumerate_morphisms
from .unitization import unitize

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce(value) -> Fraction:
    v = Fraction(value)
    if not ZERO <= v <= ONE:
        raise StructureError(f"value {v} outside [0, 1]")
    return v


@dataclass(frozen=True)
class AdditiveMap:
    """Exact rational values on a GEA carrier, one per element."""

    algebra: FiniteGea
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.algebra.n:
            raise StructureError("values are not total on the carrier")
        for v in self.values:
            if not ZERO <= v <= ONE:
                raise StructureError(f"value {v} outside [0, 1]")

    @staticmethod
    def from_names(algebra: FiniteGea, values: Mapping[str, object]) -> "AdditiveMap":
        """Values keyed by display name; unlisted elements default to 0."""
        vals = [ZERO] * algebra.n
        for name, v in values.items():
            vals[algebra.index(name)] = _coerce(v)
        return AdditiveMap(algebra, tuple(vals))

    def value(self, name: str) -> Fraction:
        return self.values[self.algebra.index(name)]


@dataclass(frozen=True)
class State(AdditiveMap):
    """An additive map on the underlying GEA of an EA, sending top to 1."""

    algebra: FiniteEa

    @staticmethod
    def from_names(algebra: FiniteEa, values: Mapping[str, object]) -> "State":
        vals = [ZERO] * algebra.n
        for name, v in values.items():
            vals[algebra.index(name)] = _coerce(v)
        return State(algebra, tuple(vals))


def _additivity_violations(
    matrix, names, zero: int, values: tuple[Fraction, ...]
) -> list[Violation]:
    violations = []
    if values[zero] != ZERO:
        violations.append(
            Violation("ZERO", (names[zero],), 1, f"value at zero is {values[zero]}, not 0")
        )
    n = len(names)
    first = None
    count = 0
    for a in range(n):
        for b in range(a, n):
            c = matrix[a][b]
            if c == UNDEF:
                continue
            total = values[a] + values[b]
            if total > ONE or values[c] != total:
                count += 1
                if first is None:
                    first = (a, b)
    if first is not None:
        a, b = first
        violations.append(
            Violation(
                "ADD",
                (names[a], names[b]),
                count,
                f"{values[a]} + {values[b]} does not match the sum's value",
            )
        )
    return violations


def check_additive(s: AdditiveMap) -> ValidationReport:
    """Valid iff the values respect every defined sum within [0, 1]."""
    alg = s.algebra
    base = alg.base if isinstance(alg, FiniteEa) else alg
    return ValidationReport(
        tuple(_additivity_violations(base.matrix, base.names, base.zero, s.values))
    )


def check_state(t: State) -> ValidationReport:
    """Additivity plus: the top is sent to exactly 1."""
    violations = _additivity_violations(
        t.algebra.matrix, t.algebra.names, t.algebra.zero, t.values
    )
    if t.values[t.algebra.top] != ONE:
        violations.append(
            Violation(
                "UNIT",
                (t.algebra.names[t.algebra.top],),
                1,
                f"value at top is {t.values[t.algebra.top]}, not 1",
            )
        )
    return ValidationReport(tuple(violations))


def extend_state(s: AdditiveMap) -> State:
    """The unique state on the unitization restricting to s: starred
    elements take the complementary value 1 - s(x)."""
    report = check_additive(s)
    if not report.valid:
        raise StructureError(f"not an additive map: {report}")
    ea = unitize(s.algebra)
    values = s.values + tuple(ONE - v for v in s.values)
    return State(ea, values)


def grid_values(max_denominator: int = 8) -> tuple[Fraction, ...]:
    """All rationals in [0, 1] with denominator at most max_denominator,
    ascending."""
    vals = {Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(q + 1)}
    return tuple(sorted(vals))


def additive_maps_grid(p: FiniteGea, max_denominator: int = 8) -> list[AdditiveMap]:
    """Every additive map whose values all lie on the rational grid.

    Backtracking over elements in index order, pruning as soon as a fully
    assigned sum constraint fails; output is ordered lexicographically by
    value tuple.
    """
    n = p.n
    m = p.matrix
    grid = grid_values(max_denominator)
    values: list[Fraction] = [ZERO] * n
    out: list[AdditiveMap] = []

    def consistent(k: int) -> bool:
        for a in range(k + 1):
            c = m[a][k]
            if c != UNDEF:
                total = values[a] + values[k]
                if total > ONE or (c <= k and values[c] != total):
                    return False
        for a in range(k):
            for b in range(a, k):
                if m[a][b] == k and values[a] + values[b] != values[k]:
                    return False
        return True

    def rec(k: int) -> None:
        if k == n:
            out.append(AdditiveMap(p, tuple(values)))
            return
        candidates = (ZERO,) if k == p.zero else grid
        for v in candidates:
            values[k] = v
            if consistent(k):
                rec(k + 1)
        values[k] = ZERO

    rec(0)
    return out


def enumerate_ideals(p: FiniteGea) -> list[tuple[int, ...]]:
    """All subsets containing zero, downward closed, and closed under
    defined sums of their members; ascending bitmask order."""
    n = p.n
    if n > 20:
        raise StructureError(f"carrier size {n} too large for subset scan")
    m = p.matrix
    order = derive_order(p)
    below = [[a for a in range(n) if order.leq(a, b)] for b in range(n)]
    out = []
    for mask in range(1 << n):
        if not mask >> p.zero & 1:
            continue
        members = [i for i in range(n) if mask >> i & 1]
        if any(a not in members for b in members for a in below[b]):
            continue
        closed = True
        for a in members:
            for b in members:
                c = m[a][b]
                if c != UNDEF and not mask >> c & 1:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(tuple(members))
    return out


@dataclass(frozen=True)
class ProbeReport:
    """Side-by-side counts for the ideals/hom-set correspondence.

    The two hom counts agree by the verified adjunction; whether the
    ideal count joins them depends on the choice of ideal definition,
    so it is reported, never asserted.
    """

    ideal_count: int
    gea_hom_count: int
    ea_hom_count: int

    @property
    def hom_counts_equal(self) -> bool:
        return self.gea_hom_count == self.ea_hom_count

    @property
    def ideal_count_matches(self) -> bool:
        return self.ideal_count == self.ea_hom_count


def ideal_correspondence_probe(p: FiniteGea) -> ProbeReport:
    """Count ideals of p, GEA morphisms into the forgotten two-atom
    Boolean algebra, and EA morphisms from the unitization into it."""
    from .core import two_squared_ea

    two_sq = two_squared_ea()
    ideals = enumerate_ideals(p)
    gea_homs = enumerate_morphisms(p, two_sq.base, "gea")
    ea_homs = enumerate_morphisms(unitize(p), two_sq, "ea")
    return ProbeReport(len(ideals), len(gea_homs), len(ea_homs))
