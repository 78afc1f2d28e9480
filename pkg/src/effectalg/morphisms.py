"""Morphisms between finite GEAs/EAs: law checking, hom-set enumeration,
composition, and the adjunction transposes.

A morphism is a total map of carriers preserving zero and all defined
sums; EA morphisms additionally preserve the top.  The transposes realize
the natural bijection between EA morphisms out of a unitization and GEA
morphisms into a forgotten EA.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    UNDEF,
    Algebra,
    FiniteEa,
    FiniteGea,
    StructureError,
    ValidationReport,
    Violation,
)


@dataclass(frozen=True)
class Morphism:
    """A total map between carriers, tagged with the category it lives in.

    kind "gea" requires FiniteGea endpoints, kind "ea" FiniteEa endpoints;
    mapping[i] is the target index of source element i.
    """

    source: Algebra
    target: Algebra
    mapping: tuple[int, ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ("gea", "ea"):
            raise StructureError(f"unknown morphism kind {self.kind!r}")
        want = FiniteGea if self.kind == "gea" else FiniteEa
        if not isinstance(self.source, want) or not isinstance(self.target, want):
            raise StructureError(f"{self.kind} morphism endpoints must be {want.__name__}")
        if len(self.mapping) != self.source.n:
            raise StructureError("mapping is not total on the source carrier")
        if any(not 0 <= v < self.target.n for v in self.mapping):
            raise StructureError("mapping hits an unknown target element")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def lines(self) -> list[str]:
        """The map in its text form, one source element per line."""
        return [
            f"map: {self.source.names[i]} -> {self.target.names[v]}"
            for i, v in enumerate(self.mapping)
        ]


def identity(alg: Algebra) -> Morphism:
    kind = "ea" if isinstance(alg, FiniteEa) else "gea"
    return Morphism(alg, alg, tuple(range(alg.n)), kind)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f; endpoints and kinds must match."""
    if f.kind != g.kind:
        raise StructureError(f"cannot compose kinds {f.kind!r} and {g.kind!r}")
    if f.target != g.source:
        raise StructureError("composition endpoints do not match")
    return Morphism(f.source, g.target, tuple(g.mapping[v] for v in f.mapping), f.kind)


def forget(f: Morphism) -> Morphism:
    """Re-tag an EA morphism as a GEA morphism of the underlying algebras."""
    if f.kind != "ea":
        raise StructureError("forget expects an EA morphism")
    return Morphism(f.source.base, f.target.base, f.mapping, "gea")


def check_morphism(f: Morphism) -> ValidationReport:
    """zero preservation, top preservation (EA kind), and sum preservation."""
    src, tgt = f.source, f.target
    ms, mt = src.matrix, tgt.matrix
    violations = []

    if f.mapping[src.zero] != tgt.zero:
        violations.append(
            Violation("ZERO", (src.names[src.zero],), 1, "zero is not sent to zero")
        )
    if f.kind == "ea" and f.mapping[src.top] != tgt.top:
        violations.append(
            Violation("UNIT", (src.names[src.top],), 1, "top is not sent to top")
        )

    first = None
    count = 0
    for a in range(src.n):
        for b in range(a, src.n):
            c = ms[a][b]
            if c == UNDEF:
                continue
            image = mt[f.mapping[a]][f.mapping[b]]
            if image == UNDEF or image != f.mapping[c]:
                count += 1
                if first is None:
                    first = (a, b)
    if first is not None:
        a, b = first
        violations.append(
            Violation(
                "SUM",
                (src.names[a], src.names[b]),
                count,
                "defined sum not preserved",
            )
        )
    return ValidationReport(tuple(violations))


@dataclass(frozen=True)
class FullnessCheck:
    full: bool
    witness: tuple[str, str] | None = None


def check_full(f: Morphism) -> FullnessCheck:
    """Full: whenever images are orthogonal, some preimages with the same
    images are orthogonal in the source."""
    src, tgt = f.source, f.target
    ms, mt = src.matrix, tgt.matrix
    n = src.n
    for a in range(n):
        for b in range(n):
            if mt[f.mapping[a]][f.mapping[b]] == UNDEF:
                continue
            ok = any(
                ms[a1][b1] != UNDEF
                and f.mapping[a1] == f.mapping[a]
                and f.mapping[b1] == f.mapping[b]
                for a1 in range(n)
                for b1 in range(n)
            )
            if not ok:
                return FullnessCheck(False, (src.names[a], src.names[b]))
    return FullnessCheck(True)


def check_isomorphism(f: Morphism) -> bool:
    """Bijective and full (assumes f already passed check_morphism)."""
    if f.source.n != f.target.n or len(set(f.mapping)) != f.source.n:
        return False
    return check_full(f).full


def enumerate_morphisms(source: Algebra, target: Algebra, kind: str) -> list[Morphism]:
    """All morphisms source -> target, in lexicographic order of the
    mapping table.

    Plain backtracking over element images with early pruning on zero/top
    preservation and on sums whose three participants are already placed;
    sizes are tiny so completeness beats cleverness.
    """
    if kind == "gea":
        if isinstance(source, FiniteEa):
            source = source.base
        if isinstance(target, FiniteEa):
            target = target.base
    elif kind == "ea":
        if not isinstance(source, FiniteEa) or not isinstance(target, FiniteEa):
            raise StructureError("ea hom-set needs FiniteEa endpoints")
    else:
        raise StructureError(f"unknown morphism kind {kind!r}")

    n, m = source.n, target.n
    ms, mt = source.matrix, target.matrix
    pinned: dict[int, int] = {source.zero: target.zero}
    if kind == "ea":
        pinned[source.top] = target.top
    image = [0] * n
    out: list[Morphism] = []

    def consistent(k: int) -> bool:
        for a in range(k + 1):
            c = ms[a][k]
            if c == UNDEF:
                continue
            v = mt[image[a]][image[k]]
            if v == UNDEF:
                return False
            if c <= k and image[c] != v:
                return False
        # Sums landing on k whose operands are already placed.
        for a in range(k):
            for b in range(a, k):
                if ms[a][b] == k and mt[image[a]][image[b]] != image[k]:
                    return False
        return True

    def rec(k: int) -> None:
        if k == n:
            out.append(Morphism(source, target, tuple(image), kind))
            return
        candidates = (pinned[k],) if k in pinned else range(m)
        for v in candidates:
            image[k] = v
            if consistent(k):
                rec(k + 1)

    rec(0)
    return out


def transpose_to_gea(f: Morphism, p: FiniteGea) -> Morphism:
    """Restrict an EA morphism out of the unitization of p to the
    unstarred copy, landing in the underlying GEA of its target."""
    from .unitization import unitize

    if f.kind != "ea":
        raise StructureError("transpose_to_gea expects an EA morphism")
    if f.source != unitize(p):
        raise StructureError("morphism source is not the unitization of p")
    return Morphism(p, f.target.base, f.mapping[: p.n], "gea")


def transpose_to_ea(g: Morphism, e: FiniteEa) -> Morphism:
    """Extend a GEA morphism into U(E) to the unitization of its source:
    unstarred elements map as g, starred ones to the complement of g."""
    from .core import complement
    from .unitization import unitize

    if g.kind != "gea":
        raise StructureError("transpose_to_ea expects a GEA morphism")
    if g.target != e.base:
        raise StructureError("morphism target is not the underlying GEA of e")
    src = unitize(g.source)
    mapping = tuple(g.mapping) + tuple(complement(e, v) for v in g.mapping)
    return Morphism(src, e, mapping, "ea")
