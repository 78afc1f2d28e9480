from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import effectalg as E
from effectalg.core import StructureError
from effectalg.states import AdditiveMap, State, additive_maps_grid, grid_values

QUARTER_MAP = {"a": "1/4", "b": "1/4", "c": "1/2", "d": "1/2"}


def test_quarter_map_is_additive(fig1):
    s = AdditiveMap.from_names(fig1, QUARTER_MAP)
    assert E.check_additive(s).valid


def test_zero_map_is_additive_everywhere(fig1, geas3):
    for gea in [fig1] + geas3:
        s = AdditiveMap.from_names(gea, {})
        assert E.check_additive(s).valid


def test_wrong_sum_value_reported(fig1):
    s = AdditiveMap.from_names(fig1, {"a": "1/4", "b": "1/4", "c": "1/3"})
    report = E.check_additive(s)
    assert not report.valid
    assert report.law("ADD").witness == ("a", "b")


def test_nonzero_value_at_zero_reported(fig1):
    s = AdditiveMap(fig1, (Fraction(1, 8),) + (Fraction(0),) * 4)
    assert E.check_additive(s).law("ZERO") is not None


def test_values_outside_interval_are_structural():
    with pytest.raises(StructureError):
        AdditiveMap.from_names(E.builtin("two_chain_gea"), {"x": "3/2"})
    with pytest.raises(StructureError):
        AdditiveMap(E.builtin("two_chain_gea"), (Fraction(0),))


def test_extension_of_quarter_map(fig1):
    s = AdditiveMap.from_names(fig1, QUARTER_MAP)
    t = E.extend_state(s)
    assert t.value("d*") == Fraction(1, 2)
    assert t.value("a*") == Fraction(3, 4)
    assert t.value("0*") == Fraction(1)
    assert E.check_state(t).valid
    assert t.values[: fig1.n] == s.values


def test_extension_of_zero_map_is_indicator(fig1):
    t = E.extend_state(AdditiveMap.from_names(fig1, {}))
    n = fig1.n
    assert t.values[:n] == (Fraction(0),) * n
    assert t.values[n:] == (Fraction(1),) * n


def test_trivial_extends_to_the_unique_state(trivial):
    t = E.extend_state(AdditiveMap.from_names(trivial, {}))
    assert t.values == (Fraction(0), Fraction(1))
    assert E.check_state(t).valid


def test_extend_rejects_invalid_input(fig1):
    s = AdditiveMap.from_names(fig1, {"a": "1/4", "b": "1/4", "c": "1/3"})
    with pytest.raises(StructureError):
        E.extend_state(s)


def test_state_on_two_squared(two_squared):
    t = State.from_names(two_squared, {"p": "1/3", "q": "2/3", "1": "1"})
    assert E.check_state(t).valid


def test_state_needs_unit_value(two_squared):
    t = State.from_names(two_squared, {"p": "1/3", "q": "2/3"})
    report = E.check_state(t)
    assert report.law("UNIT") is not None or report.law("ADD") is not None


def perturbations(t):
    """Every single starred value nudged by 1/100, staying inside [0, 1]."""
    n = t.algebra.n // 2
    eps = Fraction(1, 100)
    for i in range(n, 2 * n):
        delta = eps if t.values[i] + eps <= 1 else -eps
        values = t.values[:i] + (t.values[i] + delta,) + t.values[i + 1:]
        yield State(t.algebra, values)


def test_perturbed_starred_values_are_rejected(fig1):
    s = AdditiveMap.from_names(fig1, QUARTER_MAP)
    for bad in perturbations(E.extend_state(s)):
        assert not E.check_state(bad).valid


def test_grid_values_are_the_farey_fractions():
    vals = grid_values(8)
    assert len(vals) == 23
    assert vals[0] == 0 and vals[-1] == 1
    assert all(v.denominator <= 8 for v in vals)
    assert list(vals) == sorted(set(vals))


def test_grid_on_fig1(fig1):
    grid = additive_maps_grid(fig1)
    assert len(grid) == 89  # regression: frozen from the first oracle run
    assert all(E.check_additive(s).valid for s in grid)
    tuples = [s.values for s in grid]
    assert tuples == sorted(tuples)


def test_grid_is_complete_on_two_chain(two_chain):
    # x is free, so the grid maps are exactly the grid values.
    grid = additive_maps_grid(two_chain)
    assert [s.values[1] for s in grid] == list(grid_values(8))


@settings(max_examples=40, derandomize=True)
@given(st.data())
def test_grid_extensions_restrict_and_reject_perturbations(data):
    fig1 = E.builtin("fig1")
    s = data.draw(st.sampled_from(additive_maps_grid(fig1)))
    t = E.extend_state(s)
    assert E.check_state(t).valid
    assert t.values[: fig1.n] == s.values
    for bad in perturbations(t):
        assert not E.check_state(bad).valid


def test_ideals_of_trivial(trivial):
    assert E.enumerate_ideals(trivial) == [(0,)]


def test_ideals_of_fig1(fig1):
    ideals = E.enumerate_ideals(fig1)
    as_names = [tuple(fig1.names[i] for i in ideal) for ideal in ideals]
    assert as_names == [
        ("0",),
        ("0", "a"),
        ("0", "b", "d"),
        ("0", "a", "b", "c", "d"),
    ]


def test_ideals_of_chain_two():
    chain2 = E.builtin("chain(2)").base
    ideals = E.enumerate_ideals(chain2)
    # {0, 1} is not an ideal: 1+1 = 2 falls outside, breaking sum closure.
    assert ideals == [(0,), (0, 1, 2)]


def test_probe_on_trivial(trivial):
    probe = E.ideal_correspondence_probe(trivial)
    assert (probe.ideal_count, probe.gea_hom_count, probe.ea_hom_count) == (1, 1, 1)
    assert probe.hom_counts_equal


def test_probe_on_two_chain(two_chain):
    probe = E.ideal_correspondence_probe(two_chain)
    assert probe.gea_hom_count == probe.ea_hom_count == 4
    assert probe.ideal_count == 2  # the default ideal notion counts differently here


def test_probe_on_fig1(fig1):
    probe = E.ideal_correspondence_probe(fig1)
    assert probe.gea_hom_count == probe.ea_hom_count == 4
    assert probe.ideal_count == 4
