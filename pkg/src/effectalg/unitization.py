"""Adjoining a unit to a GEA: the construction, its functor action, and
the unit/counit morphisms that make it left adjoint to forgetting the top.

The unitized algebra lives on two disjoint copies of the carrier: the
original elements at indices 0..n-1 and their starred partners at n..2n-1.
"""

from __future__ import annotations

from .core import (
    UNDEF,
    FiniteEa,
    FiniteGea,
    PartialMap,
    StructureError,
    complement,
    ominus,
    product_ea,
    chain_ea,
    validate_ea,
    validate_gea,
)
from .morphisms import Morphism, check_morphism


def star_names(base_names: tuple[str, ...]) -> tuple[str, ...]:
    """Starred display names: a trailing `*`, wrapping the base name in
    parentheses only as deeply as needed to stay distinct from the base
    (iterated unitizations would otherwise collide: star of `0` is `0*`)."""
    taken = set(base_names)
    k = 0
    while True:
        starred = tuple("(" * k + s + ")" * k + "*" for s in base_names)
        if not taken & set(starred):
            return starred
        k += 1


def unitize(p: FiniteGea) -> FiniteEa:
    """The effect algebra on P plus a starred copy, with top = 0*.

    Sums: a+b as in P; a+b* = (b-a)* when a <= b (symmetrically); starred
    elements are never orthogonal to each other.  The output is re-checked
    with validate_ea rather than trusted.
    """
    report = validate_gea(p)
    if not report.valid:
        raise StructureError(f"cannot unitize an invalid GEA: {report}")
    n = p.n
    m = p.matrix
    names = p.names + star_names(p.names)
    triples = []
    for a in range(n):
        for b in range(a, n):
            c = m[a][b]
            if c != UNDEF:
                triples.append((a, b, c))
    for a in range(n):
        for b in range(n):
            diff = ominus(p, b, a)  # b - a, defined iff a <= b
            if diff is not None:
                triples.append((a, n + b, n + diff))
    base = FiniteGea(
        names,
        p.zero,
        PartialMap.from_triples(triples),
        name=f"{p.name}_unitized" if p.name else "unitized",
    )
    result = FiniteEa(base, n + p.zero)
    check = validate_ea(result)
    if not check.valid:
        raise StructureError(f"unitization produced an invalid EA: {check}")
    return result


def unitize_morphism(f: Morphism) -> Morphism:
    """Functor action: unstarred elements map as f, starred to f(a)*."""
    if f.kind != "gea":
        raise StructureError("unitize_morphism expects a GEA morphism")
    report = check_morphism(f)
    if not report.valid:
        raise StructureError(f"not a GEA morphism: {report}")
    src = unitize(f.source)
    tgt = unitize(f.target)
    nq = f.target.n
    mapping = tuple(f.mapping) + tuple(v + nq for v in f.mapping)
    return Morphism(src, tgt, mapping, "ea")


def unit_embedding(p: FiniteGea) -> Morphism:
    """The embedding of P into its unitization (forgetting the new top)."""
    return Morphism(p, unitize(p).base, tuple(range(p.n)), "gea")


def counit(e: FiniteEa) -> Morphism:
    """Collapse the unitization of U(E) back onto E: identity on the
    unstarred copy, complement on the starred copy."""
    n = e.n
    src = unitize(e.base)
    mapping = tuple(range(n)) + tuple(complement(e, a) for a in range(n))
    return Morphism(src, e, mapping, "ea")


def iso_to_product(e: FiniteEa) -> Morphism:
    """The isomorphism from the unitization of U(E) onto E x 2:
    a maps to (a,0) and a* to (a',1).  Composing with the projection
    onto the first factor recovers the counit."""
    two = chain_ea(1)
    src = unitize(e.base)
    tgt = product_ea(e, two)
    n = e.n
    mapping = tuple(a * 2 for a in range(n)) + tuple(
        complement(e, a) * 2 + 1 for a in range(n)
    )
    return Morphism(src, tgt, mapping, "ea")
