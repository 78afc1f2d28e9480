"""Exhaustive generation of all finite GEAs and EAs up to a given size.

This is the oracle behind every universally quantified property in the
package: "for every GEA with at most five elements" means exactly that.
The search assigns table entries pair by pair in row-major order, pruning
immediately on cancellativity/positivity and on any associativity instance
whose participants are all decided.

Table encoding during the search: -2 not yet decided, -1 decided
undefined, >= 0 decided value.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .core import UNDEF, FiniteEa, FiniteGea, PartialMap, StructureError, find_top

SIZE_GUARD = 6

_UNSET = -2


def _names(n: int) -> tuple[str, ...]:
    return ("0",) + tuple("abcdefghijklmnopqrstuvwxyz"[:n - 1])


def _partial_assoc_ok(table: list[list[int]], n: int) -> bool:
    # Monotone check: skipping an instance because a participant is still
    # unset is safe, since the same instance is rescanned at deeper nodes.
    for b in range(n):
        tb = table[b]
        for c in range(n):
            bc = tb[c]
            if bc < 0:
                continue
            for a in range(n):
                abc = table[a][bc]
                if abc < 0:
                    continue
                ab = table[a][b]
                if ab == UNDEF:
                    return False
                if ab == _UNSET:
                    continue
                ab_c = table[ab][c]
                if ab_c == UNDEF:
                    return False
                if ab_c == _UNSET:
                    continue
                if ab_c != abc:
                    return False
    return True


def _labeled_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partial tables on {0..n-1} with zero 0 satisfying the GEA laws."""
    table = [[_UNSET] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    pairs = [(a, b) for a in range(1, n) for b in range(a, n)]
    # Cancellativity bookkeeping: values already used in each row.
    rowused = [{i} for i in range(n)]
    rowused[0] = set(range(n))

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(pairs):
            yield tuple(tuple(row) for row in table)
            return
        a, b = pairs[k]
        table[a][b] = table[b][a] = UNDEF
        if _partial_assoc_ok(table, n):
            yield from rec(k + 1)
        for v in range(1, n):
            # v == a or v == b would cancel against the zero column;
            # v == 0 would violate positivity.
            if v == a or v == b or v in rowused[a] or v in rowused[b]:
                continue
            table[a][b] = table[b][a] = v
            rowused[a].add(v)
            if a != b:
                rowused[b].add(v)
            if _partial_assoc_ok(table, n):
                yield from rec(k + 1)
            rowused[a].discard(v)
            if a != b:
                rowused[b].discard(v)
        table[a][b] = table[b][a] = _UNSET

    yield from rec(0)


def _encode(table, n: int) -> tuple[int, ...]:
    return tuple(table[a][b] for a in range(1, n) for b in range(a, n))


def _is_canonical(table, n: int) -> bool:
    """Least table encoding among all relabelings fixing the zero."""
    me = _encode(table, n)
    for perm in permutations(range(1, n)):
        sigma = (0,) + perm
        relabeled = [[UNDEF] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                v = table[a][b]
                relabeled[sigma[a]][sigma[b]] = v if v == UNDEF else sigma[v]
        if _encode(relabeled, n) < me:
            return False
    return True


def _to_gea(table, n: int, name: str) -> FiniteGea:
    triples = [
        (a, b, table[a][b])
        for a in range(n)
        for b in range(a, n)
        if table[a][b] != UNDEF
    ]
    return FiniteGea(_names(n), 0, PartialMap.from_triples(triples), name=name)


def _check_mode(n: int, mode: str) -> None:
    if not 1 <= n <= SIZE_GUARD:
        raise StructureError(f"carrier size {n} outside 1..{SIZE_GUARD}")
    if mode not in ("labeled", "up-to-iso"):
        raise StructureError(f"unknown enumeration mode {mode!r}")


def enumerate_geas(n: int, mode: str = "labeled") -> Iterator[FiniteGea]:
    """All GEAs on a fixed n-element carrier with zero at index 0, in a
    deterministic search order; up-to-iso mode keeps only the canonical
    representative of each isomorphism class."""
    _check_mode(n, mode)
    count = 0
    for table in _labeled_tables(n):
        if mode == "up-to-iso" and not _is_canonical(table, n):
            continue
        yield _to_gea(table, n, f"gea{n}_{count}")
        count += 1


def enumerate_eas(n: int, mode: str = "labeled") -> Iterator[FiniteEa]:
    """The enumerated GEAs that are bounded above, with the maximum as top."""
    _check_mode(n, mode)
    count = 0
    for table in _labeled_tables(n):
        if mode == "up-to-iso" and not _is_canonical(table, n):
            continue
        gea = _to_gea(table, n, f"ea{n}_{count}")
        top = find_top(gea)
        if top is None:
            continue
        yield FiniteEa(gea, top)
        count += 1


def geas_upto(nmax: int, mode: str = "labeled") -> list[FiniteGea]:
    return [g for n in range(1, nmax + 1) for g in enumerate_geas(n, mode)]


def eas_upto(nmax: int, mode: str = "labeled") -> list[FiniteEa]:
    return [e for n in range(1, nmax + 1) for e in enumerate_eas(n, mode)]


def _degree(alg, i: int) -> int:
    return sum(1 for v in alg.matrix[i] if v != UNDEF)


def is_isomorphic(a, b) -> bool:
    """Whether a bijective full morphism exists, i.e. the tables match
    under some relabeling; zeros (and tops, for EAs) must correspond.

    Backtracking over images with pruning by orthogonality degree.
    """
    ea = isinstance(a, FiniteEa)
    if ea != isinstance(b, FiniteEa):
        raise StructureError("cannot compare algebras of different kinds")
    n = a.n
    if n != b.n:
        return False
    if sorted(_degree(a, i) for i in range(n)) != sorted(_degree(b, i) for i in range(n)):
        return False
    ma, mb = a.matrix, b.matrix
    pinned = {a.zero: b.zero}
    if ea:
        pinned[a.top] = b.top
    deg_a = [_degree(a, i) for i in range(n)]
    deg_b = [_degree(b, i) for i in range(n)]
    sigma = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        for i in range(k + 1):
            va = ma[i][k]
            vb = mb[sigma[i]][sigma[k]]
            if (va == UNDEF) != (vb == UNDEF):
                return False
            if va != UNDEF and va <= k and sigma[va] != vb:
                return False
        for i in range(k):
            for j in range(i, k):
                if ma[i][j] == k and mb[sigma[i]][sigma[j]] != sigma[k]:
                    return False
        return True

    def rec(k: int) -> bool:
        if k == n:
            return True
        candidates = (pinned[k],) if k in pinned else range(n)
        for v in candidates:
            if used[v] or deg_a[k] != deg_b[v]:
                continue
            sigma[k] = v
            used[v] = True
            if consistent(k) and rec(k + 1):
                return True
            used[v] = False
        sigma[k] = -1
        return False

    return rec(0)
