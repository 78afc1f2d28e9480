"""Independent brute-force oracles, deliberately dumber than the library.

The GEA generator enumerates every possible partial table and keeps the
ones validate_gea accepts; the order oracle recomputes reachability by
closure instead of reading table rows.  Tests compare the clever paths
against these.
"""

from itertools import product

from effectalg.core import FiniteGea, PartialMap, UNDEF, validate_gea


def names_for(n: int) -> tuple[str, ...]:
    return ("0",) + tuple("abcdefghijklmnopqrstuvwxyz"[:n - 1])


def naive_geas(n: int) -> list[FiniteGea]:
    """Every assignment of {undefined, 0..n-1} to each nonzero pair,
    filtered by the validator; no pruning, no cleverness."""
    names = names_for(n)
    pairs = [(a, b) for a in range(1, n) for b in range(a, n)]
    out = []
    for choice in product([UNDEF] + list(range(n)), repeat=len(pairs)):
        triples = [(0, i, i) for i in range(n)]
        triples.extend(
            (a, b, v) for (a, b), v in zip(pairs, choice) if v != UNDEF
        )
        gea = FiniteGea(names, 0, PartialMap.from_triples(triples))
        if validate_gea(gea).valid:
            out.append(gea)
    return out


def closure_order(gea: FiniteGea) -> frozenset[tuple[int, int]]:
    """Reflexive-transitive closure of the one-step relation a -> a+c."""
    n = gea.n
    reach = [[False] * n for _ in range(n)]
    for a in range(n):
        reach[a][a] = True
        for c in range(n):
            v = gea.matrix[a][c]
            if v != UNDEF:
                reach[a][v] = True
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(n):
                if not reach[a][b]:
                    continue
                for c in range(n):
                    if reach[b][c] and not reach[a][c]:
                        reach[a][c] = True
                        changed = True
    return frozenset((a, b) for a in range(n) for b in range(n) if reach[a][b])


def reduce_to_covers(pairs, n: int) -> set[tuple[int, int]]:
    """Transitive reduction of a strict order given as a <= relation."""
    strict = {(a, b) for a, b in pairs if a != b}
    return {
        (a, b)
        for a, b in strict
        if not any((a, c) in strict and (c, b) in strict for c in range(n))
    }
