"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines as they happen; plain `pytest` shows them in captured output.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

import effectalg as E
from effectalg.catlaws import t_obj
from effectalg.cli import main, parse_algebra
from effectalg.morphisms import Morphism
from effectalg.states import AdditiveMap, State, additive_maps_grid
from effectalg.enumeration import eas_upto, geas_upto

from conftest import DATA, GOLDEN
from naive_oracle import naive_geas


@contextmanager
def criterion(number: int, summary: str):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"criterion {number}: FAIL - {summary}")
        raise
    elapsed = time.monotonic() - start
    print(f"criterion {number}: PASS - {summary} ({elapsed:.2f}s)")


def test_criterion_1_figure_golden():
    with criterion(1, "golden example parses, unitizes, and matches the stored Hasse diagram"):
        start = time.monotonic()
        alg = parse_algebra((DATA / "fig1.alg").read_text())
        assert E.validate_gea(alg).valid
        assert E.find_top(alg) is None  # not an effect algebra
        fp = E.unitize(alg)
        assert fp.n == 10
        assert E.validate_ea(fp).valid
        covers = [
            f"{fp.names[a]} {fp.names[b]}" for a, b in E.derive_order(fp.base).covers()
        ]
        golden = (GOLDEN / "fig1_unitized_covers.txt").read_text().splitlines()
        assert covers == golden
        assert time.monotonic() - start < 1.0


def test_criterion_2_unitization_sweep():
    with criterion(2, "every GEA with at most 5 elements unitizes to a valid EA"):
        start = time.monotonic()
        checked = 0
        for gea in geas_upto(5):
            fp = E.unitize(gea)  # validates its own output
            assert E.validate_ea(fp).valid
            for x in range(gea.n):
                assert fp.sum_of(x, gea.n + x) == fp.top
            checked += 1
        assert checked == 1 + 1 + 3 + 19 + 173
        assert time.monotonic() - start < 60.0


def test_criterion_3_triangle_identities():
    with criterion(3, "both triangle identities hold on all algebras of size <= 4"):
        start = time.monotonic()
        two_sq = E.builtin("two_squared")
        trivial = E.builtin("trivial")
        for gea in geas_upto(4):
            left, _ = E.verify_triangles(gea, two_sq)
            assert left.ok
        for ea in eas_upto(4):
            _, right = E.verify_triangles(trivial, ea)
            assert right.ok
        assert time.monotonic() - start < 60.0


def test_criterion_4_iso_onto_product():
    with criterion(4, "the unitization of U(E) is isomorphic to E x 2, compatibly with the counit"):
        for ea in eas_upto(4):
            w = E.iso_to_product(ea)
            assert E.check_morphism(w).valid
            assert E.check_isomorphism(w)
            proj = Morphism(w.target, ea, tuple(i // 2 for i in range(w.target.n)), "ea")
            assert E.compose(proj, w) == E.counit(ea)


def test_criterion_5_hom_bijection():
    with criterion(5, "transposition is a bijection between the two hom-sets"):
        two_chain = E.builtin("two_chain_gea")
        two_sq = E.builtin("two_squared")
        pairs_checked = 0
        for p in geas_upto(3):
            fp = E.unitize(p)
            for e in eas_upto(4):
                ea_homs = E.enumerate_morphisms(fp, e, "ea")
                gea_homs = E.enumerate_morphisms(p, e.base, "gea")
                assert len(ea_homs) == len(gea_homs)
                for f in ea_homs:
                    assert E.transpose_to_ea(E.transpose_to_gea(f, p), e) == f
                for g in gea_homs:
                    assert E.transpose_to_gea(E.transpose_to_ea(g, e), p) == g
                pairs_checked += 1
        assert pairs_checked == 5 * 16
        assert len(E.enumerate_morphisms(two_chain, two_sq.base, "gea")) == 4
        assert len(E.enumerate_morphisms(E.unitize(two_chain), two_sq, "ea")) == 4


def test_criterion_6_monad_and_em_laws():
    with criterion(6, "monad laws hold and EAs are exactly the monad algebras at desk scale"):
        for gea in geas_upto(3) + [E.builtin("fig1")]:
            assert all(r.ok for r in E.verify_monad_laws(gea))
        for ea in eas_upto(4):
            x, h = E.algebra_from_ea(ea)
            assert all(r.ok for r in E.em_algebra_check(x, h))
        fig1 = E.builtin("fig1")
        passing = [
            h
            for h in E.enumerate_morphisms(t_obj(fig1), fig1, "gea")
            if all(r.ok for r in E.em_algebra_check(fig1, h))
        ]
        assert passing == []


def test_criterion_7_state_extension_grid():
    with criterion(7, "grid additive maps extend uniquely to states, exactly"):
        eps = Fraction(1, 100)
        for gea in [E.builtin("fig1")] + geas_upto(3):
            for s in additive_maps_grid(gea):
                t = E.extend_state(s)
                assert E.check_state(t).valid
                assert t.values[: gea.n] == s.values
                n = gea.n
                for i in range(n, 2 * n):
                    delta = eps if t.values[i] + eps <= 1 else -eps
                    bad = State(
                        t.algebra, t.values[:i] + (t.values[i] + delta,) + t.values[i + 1:]
                    )
                    assert not E.check_state(bad).valid


def test_criterion_8_enumeration_cross_check():
    with criterion(8, "the pruned enumerator agrees with the naive filter at small sizes"):
        for n, want in ((1, 1), (2, 1), (3, 3)):
            fast = list(E.enumerate_geas(n))
            naive = naive_geas(n)
            assert len(fast) == want
            assert len(naive) == want
            assert {g.sums.entries for g in fast} == {g.sums.entries for g in naive}


def test_criterion_9_ideal_probe():
    with criterion(9, "the ideals probe reports counts; only the hom counts are asserted equal"):
        for name in ("trivial", "two_chain_gea", "fig1"):
            probe = E.ideal_correspondence_probe(E.builtin(name))
            assert probe.ideal_count >= 1
            assert probe.gea_hom_count == probe.ea_hom_count
            print(
                f"  {name}: ideals={probe.ideal_count} "
                f"gea-homs={probe.gea_hom_count} ea-homs={probe.ea_hom_count}"
            )


def test_criterion_10_cli_determinism(tmp_path, capsys):
    with criterion(10, "every documented subcommand is byte-deterministic with documented exits"):
        alg = tmp_path / "fig1.alg"
        alg.write_text((DATA / "fig1.alg").read_text())
        values = tmp_path / "quarter.map"
        values.write_text((DATA / "fig1_quarter.map").read_text())
        morphism = tmp_path / "zero.mor"
        morphism.write_text((DATA / "zero_to_twosq.mor").read_text())
        embed = tmp_path / "embed.mor"
        embed.write_text((DATA / "embed_two_chain.mor").read_text())

        vectors = [
            ["check", "builtin:fig1"],
            ["check", "builtin:two_squared"],
            ["unitize", str(alg)],
            ["unitize", str(alg), "--dot"],
            ["order", "builtin:fig1"],
            ["order", "builtin:fig1_unitized", "--dot"],
            ["hom", "builtin:two_chain_gea", "builtin:two_squared", "--count"],
            ["hom", "builtin:two_squared", "builtin:two_squared", "--kind", "ea"],
            ["hom", "builtin:two_chain_gea", "builtin:fig1", "--full-only"],
            ["laws", "builtin:fig1"],
            ["laws", "builtin:two_squared", "--triangles", "builtin:chain(2)", "--em"],
            ["laws", "builtin:two_chain_gea", "--naturality", str(embed)],
            ["state", "extend", str(alg), str(values)],
            ["ideals", "builtin:fig1", "--probe"],
            ["enumerate", "3"],
            ["enumerate", "4", "--kind", "ea", "--up-to-iso"],
            ["transpose", str(alg), str(morphism), "--direction", "to-ea"],
        ]
        capsys.readouterr()
        for argv in vectors:
            assert main(argv) == 0, argv
            first = capsys.readouterr().out
            assert main(argv) == 0, argv
            second = capsys.readouterr().out
            assert first == second, argv
            assert first  # something was printed
        # Documented nonzero exits: 1 for failed checks, 2 for parse errors.
        bad = tmp_path / "bad.alg"
        bad.write_text("elements: 0 a\nzero: 0\nsum: a a a\n")
        assert main(["check", str(bad)]) == 1
        ugly = tmp_path / "ugly.alg"
        ugly.write_text("elements: 0 a\nzero: 0\nsum: 0 a 0\n")
        assert main(["check", str(ugly)]) == 2
        capsys.readouterr()
