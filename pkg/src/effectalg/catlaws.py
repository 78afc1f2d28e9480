"""Pointwise verification of the adjunction, the induced monad, and
Eilenberg-Moore algebra laws on finite instances.

The monad sends P to the underlying GEA of its unitization; unit is the
embedding, multiplication collapses the double unitization via the
counit.  Everything here is checked element by element, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteEa, FiniteGea, StructureError
from .morphisms import Morphism, check_morphism, compose, forget, identity
from .unitization import counit, unit_embedding, unitize, unitize_morphism

# T cubed multiplies the carrier by 8; stay within the core scan limit.
MONAD_SIZE_LIMIT = 8


@dataclass(frozen=True)
class LawReport:
    """One pointwise law: the elements where the two sides disagree."""

    law: str
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.ok:
            return f"{self.law}: ok"
        return f"{self.law}: FAIL at {', '.join(self.failures)}"


def _pointwise(law: str, got: Morphism, want: Morphism) -> LawReport:
    bad = tuple(
        got.source.names[i]
        for i in range(got.source.n)
        if got.mapping[i] != want.mapping[i]
    )
    return LawReport(law, bad)


def t_obj(p: FiniteGea) -> FiniteGea:
    """The monad on objects: unitize, then forget the top."""
    return unitize(p).base


@dataclass(frozen=True)
class MonadInstance:
    """The monad data at one object: the carrier, its image, and the unit
    and multiplication components there."""

    p: FiniteGea
    tp: FiniteGea
    unit: Morphism
    mult: Morphism

    @staticmethod
    def at(p: FiniteGea) -> "MonadInstance":
        return MonadInstance(p, t_obj(p), unit_embedding(p), mu(p))


def t_mor(f: Morphism) -> Morphism:
    """The monad on morphisms: unitize the morphism, then forget."""
    return forget(unitize_morphism(f))


def mu(p: FiniteGea) -> Morphism:
    """Monad multiplication at p: the forgotten counit of the unitization."""
    return forget(counit(unitize(p)))


def verify_triangles(p: FiniteGea, e: FiniteEa) -> tuple[LawReport, LawReport]:
    """Both triangle identities of the adjunction, pointwise.

    Left: the counit at the unitization of p undoes the unitized embedding.
    Right: forgetting the counit at e undoes the embedding of U(e).
    """
    fp = unitize(p)
    left = compose(counit(fp), unitize_morphism(unit_embedding(p)))
    right = compose(forget(counit(e)), unit_embedding(e.base))
    return (
        _pointwise("triangle-left", left, identity(fp)),
        _pointwise("triangle-right", right, identity(e.base)),
    )


def verify_unit_naturality(f: Morphism) -> LawReport:
    """T(f) after the embedding equals the embedding after f."""
    if f.kind != "gea":
        raise StructureError("unit naturality needs a GEA morphism")
    lhs = compose(t_mor(f), unit_embedding(f.source))
    rhs = compose(unit_embedding(f.target), f)
    return _pointwise("unit-naturality", lhs, rhs)


def verify_counit_naturality(g: Morphism) -> LawReport:
    """g after the counit equals the counit after the unitized forgetting of g."""
    if g.kind != "ea":
        raise StructureError("counit naturality needs an EA morphism")
    lhs = compose(g, counit(g.source))
    rhs = compose(counit(g.target), unitize_morphism(forget(g)))
    return _pointwise("counit-naturality", lhs, rhs)


def verify_monad_laws(p: FiniteGea) -> tuple[LawReport, LawReport, LawReport]:
    """Unit laws on T(p) and associativity on T cubed, all pointwise."""
    if p.n > MONAD_SIZE_LIMIT:
        raise StructureError(
            f"carrier size {p.n} exceeds monad law limit {MONAD_SIZE_LIMIT}"
        )
    tp = t_obj(p)
    mu_p = mu(p)
    left_unit = compose(mu_p, t_mor(unit_embedding(p)))
    right_unit = compose(mu_p, unit_embedding(tp))
    assoc_l = compose(mu_p, t_mor(mu_p))
    assoc_r = compose(mu_p, mu(tp))
    return (
        _pointwise("monad-left-unit", left_unit, identity(tp)),
        _pointwise("monad-right-unit", right_unit, identity(tp)),
        _pointwise("monad-associativity", assoc_l, assoc_r),
    )


def em_algebra_check(x: FiniteGea, h: Morphism) -> tuple[LawReport, LawReport]:
    """Eilenberg-Moore laws for a structure map h: T(x) -> x."""
    if h.kind != "gea" or h.source != t_obj(x) or h.target != x:
        raise StructureError("structure map must be a GEA morphism T(x) -> x")
    report = check_morphism(h)
    if not report.valid:
        raise StructureError(f"structure map is not a morphism: {report}")
    unit_law = compose(h, unit_embedding(x))
    mult_l = compose(h, t_mor(h))
    mult_r = compose(h, mu(x))
    return (
        _pointwise("em-unit", unit_law, identity(x)),
        _pointwise("em-multiplication", mult_l, mult_r),
    )


def algebra_from_ea(e: FiniteEa) -> tuple[FiniteGea, Morphism]:
    """Every EA is an algebra for the monad: carrier U(e), structure map
    the forgotten counit."""
    return e.base, forget(counit(e))
