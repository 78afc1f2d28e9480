"""Finite generalized effect algebras (GEAs) and effect algebras (EAs).

A GEA is a partial commutative monoid that is also cancellative and
positive; an EA is a GEA whose derived order has a greatest element.
Carriers are explicit finite lists, the partial sum is a Cayley table,
and every law is decided by exhaustive scan, so nothing is ever taken
on faith from a theorem.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

# Soft cap on carrier size: keeps the cubic law scans sub-second.
SCAN_LIMIT = 64

UNDEF = -1


class StructureError(ValueError):
    """Malformed input: unknown element, conflicting table entry, bad arity.

    Distinct from an axiom violation, which is a normal reportable outcome.
    """


@dataclass(frozen=True)
class Violation:
    """One violated law: its first (lexicographically least) witness and
    the total number of witnesses found."""

    law: str
    witness: tuple[str, ...]
    count: int
    detail: str

    def __str__(self) -> str:
        where = ", ".join(self.witness)
        return f"{self.law} fails at ({where}): {self.detail} [{self.count} total]"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def law(self, name: str) -> Violation | None:
        for v in self.violations:
            if v.law == name:
                return v
        return None

    def __str__(self) -> str:
        if self.valid:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class PartialMap:
    """A symmetric partial binary operation on element indices.

    Entries are stored once per unordered pair, normalized to a <= b and
    sorted, so lookup(a, b) == lookup(b, a) holds structurally.
    """

    entries: tuple[tuple[int, int, int], ...]

    @staticmethod
    def from_triples(triples: Iterable[tuple[int, int, int]]) -> "PartialMap":
        """Build from (a, b, a+b) triples; either orientation may appear.

        Raises StructureError if one pair is given two different results.
        """
        seen: dict[tuple[int, int], int] = {}
        for a, b, c in triples:
            key = (a, b) if a <= b else (b, a)
            if key in seen and seen[key] != c:
                raise StructureError(
                    f"conflicting results for pair {key}: {seen[key]} and {c}"
                )
            seen[key] = c
        return PartialMap(tuple((a, b, c) for (a, b), c in sorted(seen.items())))

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {(a, b): c for a, b, c in self.entries}

    def get(self, a: int, b: int) -> int | None:
        key = (a, b) if a <= b else (b, a)
        return self._index.get(key)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FiniteGea:
    """A finite partial algebra (carrier; +, 0) given by its Cayley table.

    Candidate structure only: validate_gea decides whether the table
    actually satisfies the GEA laws.
    """

    names: tuple[str, ...]
    zero: int
    sums: PartialMap
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.names)
        if n == 0:
            raise StructureError("empty carrier")
        if len(set(self.names)) != n or any(not s for s in self.names):
            raise StructureError("display names must be distinct and nonempty")
        if not 0 <= self.zero < n:
            raise StructureError(f"zero index {self.zero} out of range")
        for a, b, c in self.sums.entries:
            if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
                raise StructureError(f"sum entry ({a},{b},{c}) references unknown element")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"unknown element name {name!r}") from None

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Full n x n table with UNDEF (-1) marking undefined sums."""
        n = self.n
        m = [[UNDEF] * n for _ in range(n)]
        for a, b, c in self.sums.entries:
            m[a][b] = c
            m[b][a] = c
        return tuple(tuple(row) for row in m)

    def sum_of(self, a: int, b: int) -> int | None:
        v = self.matrix[a][b]
        return None if v == UNDEF else v

    def defined(self, a: int, b: int) -> bool:
        return self.matrix[a][b] != UNDEF

    @staticmethod
    def build(
        names: Sequence[str],
        zero: str,
        sums: Iterable[tuple[str, str, str]] = (),
        name: str = "",
    ) -> "FiniteGea":
        """Assemble from display names, inserting the zero-row closure.

        Input sums need not list 0+x = x or both orientations of a pair;
        a sum contradicting the closure is a StructureError.
        """
        names = tuple(names)
        lookup = {s: i for i, s in enumerate(names)}
        if len(lookup) != len(names):
            raise StructureError("display names must be distinct")
        if zero not in lookup:
            raise StructureError(f"zero element {zero!r} not in carrier")
        z = lookup[zero]

        def idx(s: str) -> int:
            if s not in lookup:
                raise StructureError(f"unknown element name {s!r}")
            return lookup[s]

        triples = [(z, i, i) for i in range(len(names))]
        triples.extend((idx(a), idx(b), idx(c)) for a, b, c in sums)
        return FiniteGea(names, z, PartialMap.from_triples(triples), name=name)


@dataclass(frozen=True)
class FiniteEa:
    """A finite GEA together with a distinguished top element."""

    base: FiniteGea
    top: int

    def __post_init__(self) -> None:
        if not 0 <= self.top < self.base.n:
            raise StructureError(f"top index {self.top} out of range")

    # Delegation keeps call sites uniform over both kinds of algebra.
    @property
    def names(self) -> tuple[str, ...]:
        return self.base.names

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def zero(self) -> int:
        return self.base.zero

    @property
    def sums(self) -> PartialMap:
        return self.base.sums

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return self.base.matrix

    @property
    def name(self) -> str:
        return self.base.name

    def index(self, name: str) -> int:
        return self.base.index(name)

    def sum_of(self, a: int, b: int) -> int | None:
        return self.base.sum_of(a, b)

    def defined(self, a: int, b: int) -> bool:
        return self.base.defined(a, b)

    @staticmethod
    def build(
        names: Sequence[str],
        zero: str,
        top: str,
        sums: Iterable[tuple[str, str, str]] = (),
        name: str = "",
    ) -> "FiniteEa":
        base = FiniteGea.build(names, zero, sums, name=name)
        return FiniteEa(base, base.index(top))


Algebra = FiniteGea | FiniteEa


@dataclass(frozen=True)
class OrderRelation:
    """The derived order: a <= b iff a+c = b for some c."""

    size: int
    pairs: frozenset[tuple[int, int]]

    def leq(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs

    def maximum(self) -> int | None:
        for b in range(self.size):
            if all((a, b) in self.pairs for a in range(self.size)):
                return b
        return None

    def minimum(self) -> int | None:
        for a in range(self.size):
            if all((a, b) in self.pairs for b in range(self.size)):
                return a
        return None

    def is_partial_order(self) -> bool:
        n = self.size
        if any((a, a) not in self.pairs for a in range(n)):
            return False
        for a, b in self.pairs:
            if a != b and (b, a) in self.pairs:
                return False
            for c in range(n):
                if (b, c) in self.pairs and (a, c) not in self.pairs:
                    return False
        return True

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs (a, b): a < b with nothing strictly between."""
        out = []
        for a in range(self.size):
            for b in range(self.size):
                if a == b or (a, b) not in self.pairs:
                    continue
                if any(
                    c != a and c != b and (a, c) in self.pairs and (c, b) in self.pairs
                    for c in range(self.size)
                ):
                    continue
                out.append((a, b))
        return tuple(sorted(out))


def _scan_guard(n: int) -> None:
    if n > SCAN_LIMIT:
        raise StructureError(f"carrier size {n} exceeds scan limit {SCAN_LIMIT}")


def validate_gea(gea: FiniteGea) -> ValidationReport:
    """Exhaustively check the GEA laws; commutativity is structural.

    Each violated law is reported once, with the lexicographically least
    witness (by element index) and the total number of witnesses.
    """
    n = gea.n
    _scan_guard(n)
    m = gea.matrix
    z = gea.zero
    names = gea.names
    violations = []

    # Associativity: b_|_c and a_|_(b+c) force a_|_b, (a+b)_|_c and equal results.
    first = None
    count = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                bc = m[b][c]
                if bc == UNDEF:
                    continue
                abc = m[a][bc]
                if abc == UNDEF:
                    continue
                ab = m[a][b]
                if ab == UNDEF or m[ab][c] != abc:
                    count += 1
                    if first is None:
                        first = (a, b, c)
    if first is not None:
        a, b, c = first
        violations.append(
            Violation(
                "P2",
                (names[a], names[b], names[c]),
                count,
                "associativity closure fails",
            )
        )

    # Zero law.
    first = None
    count = 0
    for a in range(n):
        if m[a][z] != a:
            count += 1
            if first is None:
                first = a
    if first is not None:
        violations.append(
            Violation("P3", (names[first],), count, "a+0 = a missing or wrong")
        )

    # Cancellativity: each row is injective where defined.
    firstw = None
    count = 0
    for a in range(n):
        seen: dict[int, int] = {}
        for b in range(n):
            v = m[a][b]
            if v == UNDEF:
                continue
            if v in seen:
                count += 1
                if firstw is None:
                    firstw = (a, seen[v], b)
            else:
                seen[v] = b
    if firstw is not None:
        a, b, c = firstw
        violations.append(
            Violation(
                "P4",
                (names[a], names[b], names[c]),
                count,
                f"{names[a]}+{names[b]} = {names[a]}+{names[c]} but {names[b]} != {names[c]}",
            )
        )

    # Positivity: only 0+0 may equal 0.
    firstp = None
    count = 0
    for a in range(n):
        for b in range(a, n):
            if m[a][b] == z and not (a == z and b == z):
                count += 1
                if firstp is None:
                    firstp = (a, b)
    if firstp is not None:
        a, b = firstp
        violations.append(
            Violation("P5", (names[a], names[b]), count, "nonzero elements sum to 0")
        )

    violations.sort(key=lambda v: v.law)
    return ValidationReport(tuple(violations))


def validate_ea(ea: FiniteEa) -> ValidationReport:
    """Check the base GEA laws plus: top is the maximum of the derived order."""
    report = validate_gea(ea.base)
    order = derive_order(ea.base)
    below = [a for a in range(ea.n) if not order.leq(a, ea.top)]
    if below:
        v = Violation(
            "TOP",
            (ea.names[below[0]],),
            len(below),
            f"element not below the declared top {ea.names[ea.top]}",
        )
        return ValidationReport(report.violations + (v,))
    return report


def derive_order(gea: FiniteGea) -> OrderRelation:
    """a <= b iff some c has a+c = b; reads the table rows directly."""
    n = gea.n
    m = gea.matrix
    pairs = set()
    for a in range(n):
        row = m[a]
        for c in range(n):
            v = row[c]
            if v != UNDEF:
                pairs.add((a, v))
    return OrderRelation(n, frozenset(pairs))


def ominus(gea: FiniteGea, a: int, b: int) -> int | None:
    """The unique c with a = b+c, or None when b is not below a.

    Uniqueness is cancellativity; on an invalid table the first witness
    in index order is returned.
    """
    row = gea.matrix[b]
    for c in range(gea.n):
        if row[c] == a:
            return c
    return None


def find_top(gea: FiniteGea) -> int | None:
    """The greatest element of the derived order, if one exists."""
    return derive_order(gea).maximum()


def complement(ea: FiniteEa, a: int) -> int:
    """The unique a' with a + a' = top; total on any valid EA."""
    c = ominus(ea.base, ea.top, a)
    if c is None:
        raise StructureError(
            f"element {ea.names[a]} has no complement; not a valid effect algebra"
        )
    return c


def product_ea(e1: FiniteEa, e2: FiniteEa) -> FiniteEa:
    """Componentwise product: (a,i)+(b,j) defined iff both components are."""
    n1, n2 = e1.n, e2.n
    _scan_guard(n1 * n2)
    names = tuple(f"({a},{b})" for a in e1.names for b in e2.names)
    m1, m2 = e1.matrix, e2.matrix
    triples = []
    for a1 in range(n1):
        for a2 in range(n2):
            for b1 in range(n1):
                for b2 in range(n2):
                    c1 = m1[a1][b1]
                    c2 = m2[a2][b2]
                    if c1 != UNDEF and c2 != UNDEF:
                        triples.append((a1 * n2 + a2, b1 * n2 + b2, c1 * n2 + c2))
    base = FiniteGea(
        names,
        e1.zero * n2 + e2.zero,
        PartialMap.from_triples(triples),
        name=f"product({e1.name},{e2.name})",
    )
    return FiniteEa(base, e1.top * n2 + e2.top)


_LETTERS = "abcdefghijklmnopqrstuvwxyz"

_PARAM_RE = re.compile(r"^(chain|boolean)\((\d+)\)$")


def chain_ea(n: int) -> FiniteEa:
    """The (n+1)-element chain: i+j defined iff i+j <= n."""
    if n < 0:
        raise StructureError("chain size must be nonnegative")
    names = tuple(str(i) for i in range(n + 1))
    sums = [
        (names[i], names[j], names[i + j])
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if i + j <= n
    ]
    return FiniteEa.build(names, "0", names[n], sums, name=f"chain({n})")


def boolean_ea(n: int) -> FiniteEa:
    """The Boolean algebra with n atoms: disjoint union of subsets."""
    if n < 0:
        raise StructureError("boolean size must be nonnegative")
    if 2**n > SCAN_LIMIT:
        raise StructureError(f"boolean({n}) exceeds scan limit {SCAN_LIMIT}")

    def label(mask: int) -> str:
        if mask == 0:
            return "0"
        if mask == 2**n - 1 and n > 1:
            return "1"
        return "".join(_LETTERS[i] for i in range(n) if mask >> i & 1)

    names = tuple(label(m) for m in range(2**n))
    sums = [
        (names[a], names[b], names[a | b])
        for a in range(1, 2**n)
        for b in range(a, 2**n)
        if a & b == 0
    ]
    return FiniteEa.build(names, "0", names[2**n - 1], sums, name=f"boolean({n})")


def fig1_gea() -> FiniteGea:
    """Five-element example with two incomparable maximal elements:
    a+b = c and b+b = d; it has no top, so it is not an effect algebra."""
    return FiniteGea.build(
        ("0", "a", "b", "c", "d"),
        "0",
        [("a", "b", "c"), ("b", "b", "d")],
        name="fig1",
    )


def two_squared_ea() -> FiniteEa:
    """The Boolean algebra with two atoms: p+q = 1, p+p and q+q undefined."""
    return FiniteEa.build(
        ("0", "p", "q", "1"), "0", "1", [("p", "q", "1")], name="two_squared"
    )


def builtin(name: str) -> Algebra:
    """Named test algebras; chain(n) and boolean(n) are parametric."""
    if name == "fig1":
        return fig1_gea()
    if name == "fig1_unitized":
        from .unitization import unitize

        return unitize(fig1_gea())
    if name == "trivial":
        return FiniteGea.build(("0",), "0", name="trivial")
    if name == "two_chain_gea":
        return FiniteGea.build(("0", "x"), "0", name="two_chain_gea")
    if name == "two_squared":
        return two_squared_ea()
    m = _PARAM_RE.match(name)
    if m:
        kind, num = m.group(1), int(m.group(2))
        return chain_ea(num) if kind == "chain" else boolean_ea(num)
    raise StructureError(f"unknown builtin algebra {name!r}")
