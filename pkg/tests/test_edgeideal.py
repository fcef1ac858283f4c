import numpy as np
import pytest

import oracles
from primegraph.edgeideal import (
    binom,
    closed_form_generators,
    closed_form_strata,
    complete_graph_power_generators,
    compositions,
    count_generators,
    cross_power_generators,
    edge_ideal,
    edge_ideal_ab,
    height_and_dim,
    primary_decomposition,
    star_count,
    stratum_counts,
    verify_primary_decomposition,
    zpm_mu,
    zpm_parameters,
)
from primegraph.errors import CapExceededError
from primegraph.graph import abstract_split_graph, build_graph
from primegraph.monomial import Monomial, MonomialIdeal, is_squarefree, power
from primegraph.ring import make_ring, prime_ideals

P = Monomial.parse


def as_set(i):
    return {tuple(int(e) for e in r) for r in i.rows}


def ring_model(n, prime):
    r = make_ring([n])
    p = next(p for p in prime_ideals(r) if p.prime == prime)
    return edge_ideal(build_graph(r, p))


def test_binom_convention():
    assert binom(-1, 0) == 0 and binom(2, 3) == 0 and binom(4, 2) == 6 and binom(0, 0) == 1


def test_edge_ideal_examples():
    star = ring_model(6, 3)
    assert star.ideal.strings() == ["x1*y1", "x1*y2", "x1*y3", "x1*y4"]
    z8 = ring_model(8, 2)
    assert len(z8.ideal) == 15
    assert len(z8.clique_part) == 3 and len(z8.cross_part) == 12
    assert edge_ideal(abstract_split_graph(0, 4)).ideal.is_zero()


@pytest.mark.parametrize("a, b", [(a, b) for a in range(0, 5) for b in range(1, 5)])
def test_edge_ideal_shape(a, b):
    m = edge_ideal_ab(a, b)
    assert as_set(m.ideal) == oracles.split_edge_ideal(a, b)
    assert len(m.ideal) == binom(a, 2) + a * b
    assert is_squarefree(m.ideal)


def test_closed_form_example_z8_square():
    gens = closed_form_generators(3, 4, 2).gens
    for text in ("x1^2*x2*x3", "x1^2*y1*y2", "x1*x2*y1*y4"):
        assert P(text, 3, 4) in gens
    assert P("x1^3*y1", 3, 4) not in gens


def test_closed_form_star():
    sq = closed_form_generators(1, 4, 2)
    assert len(sq) == 10 and all(m.alpha == (2,) for m in sq)
    cube = closed_form_generators(1, 2, 3)
    assert cube.gens == {Monomial((3,), (i, 3 - i)) for i in range(4)}
    assert as_set(cube) == oracles.power_ideal(oracles.split_edge_ideal(1, 2), 3, 3)


def test_closed_form_zero_and_errors():
    assert closed_form_generators(0, 3, 2).is_zero()
    with pytest.raises(ValueError):
        closed_form_generators(2, 2, 0)
    with pytest.raises(CapExceededError):
        closed_form_generators(6, 6, 6, cap=1000)


@pytest.mark.parametrize("a, b, n", [(a, b, n) for a in (1, 2, 3) for b in (1, 2, 3) for n in (1, 2, 3)])
def test_closed_form_against_python_oracle(a, b, n):
    expected = oracles.power_ideal(oracles.split_edge_ideal(a, b), n, a + b)
    assert as_set(closed_form_generators(a, b, n)) == expected


def test_closed_form_against_degree_filter():
    # the characterization, checked against a filter over all monomials of degree 2n
    a, b, n = 2, 3, 3
    want = {e for e in oracles.all_monomials(2 * n, a + b) if sum(e[a:]) <= n and max(e[:a]) <= n}
    assert as_set(closed_form_generators(a, b, n)) == want


def test_strata_layout():
    a, b, n = 3, 4, 3
    strata = list(closed_form_strata(a, b, n))
    assert [s for s, _ in strata] == list(range(n + 1))
    assert [len(rows) for _, rows in strata] == stratum_counts(a, b, n)
    for s, rows in strata:
        assert (rows[:, a:].sum(axis=1) == s).all()
        # lexicographic (descending) within a stratum
        keys = [tuple(r) for r in rows.tolist()]
        assert keys == sorted(keys, reverse=True)


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(4, 2, 2)) == [(2, 2)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []


def test_count_generators_table_values():
    assert [count_generators(1, 4, n) for n in (1, 2, 3)] == [4, 10, 20]
    assert [count_generators(3, 4, n) for n in (1, 2, 3)] == [15, 94, 378]
    assert count_generators(2, 6, 1) == 13 == len(power(edge_ideal_ab(2, 6).ideal, 1))
    assert count_generators(0, 5, 3) == 0


@pytest.mark.parametrize("a, b", [(a, b) for a in range(1, 5) for b in range(1, 6)])
def test_count_matches_enumeration(a, b):
    for n in range(1, 5):
        assert len(closed_form_generators(a, b, n)) == count_generators(a, b, n)


def test_count_matches_unconstrained_enumeration():
    # no use of the "at most one exponent exceeds n" argument: filter every monomial
    for a, b, n in [(2, 2, 3), (3, 1, 3), (4, 2, 2), (3, 3, 2)]:
        count = sum(1 for e in oracles.all_monomials(2 * n, a + b)
                    if sum(e[a:]) <= n and max(e[:a]) <= n)
        assert count == count_generators(a, b, n)


@pytest.mark.parametrize("b", range(1, 9))
def test_star_reduction(b):
    for n in range(1, 7):
        assert count_generators(1, b, n) == star_count(b, n)


def test_star_count_examples():
    assert star_count(4, 2) == 10
    assert [star_count(2, n) for n in range(1, 6)] == [n + 1 for n in range(1, 6)]
    assert [len(power(edge_ideal_ab(1, 2).ideal, n)) for n in range(1, 5)] == [2, 3, 4, 5]
    assert star_count(1, 7) == 1


def test_complete_graph_powers():
    g = complete_graph_power_generators(3, 2)
    assert len(g) == 6
    assert sorted(sorted(m.alpha) for m in g) == sorted([[0, 2, 2]] * 3 + [[1, 1, 2]] * 3)
    assert as_set(g) == oracles.power_ideal(oracles.split_edge_ideal(3, 0), 2, 3)
    assert complete_graph_power_generators(4, 0).is_unit()
    assert complete_graph_power_generators(2, 3).strings() == ["x1^3*x2^3"]
    for a in range(1, 6):
        for q in range(0, 4):
            expected = oracles.power_ideal(oracles.split_edge_ideal(a, 0), q, a)
            assert as_set(complete_graph_power_generators(a, q)) == expected


def test_cross_powers():
    assert cross_power_generators(1, 4, 1).strings() == ["x1*y1", "x1*y2", "x1*y3", "x1*y4"]
    two = cross_power_generators(2, 2, 2)
    assert len(two) == 9
    xs = {(1, 0, 0, 0), (0, 1, 0, 0)}
    ys = {(0, 0, 1, 0), (0, 0, 0, 1)}
    assert as_set(two) == oracles.product_ideal(oracles.product_ideal(xs, xs), oracles.product_ideal(ys, ys))
    assert cross_power_generators(3, 2, 0).is_unit()


@pytest.mark.parametrize("a, b", [(a, b) for a in range(1, 5) for b in range(1, 5)])
def test_bottom_and_top_strata(a, b):
    for n in range(1, 4):
        strata = dict(closed_form_strata(a, b, n))
        bottom = strata[0]
        assert (bottom[:, a:] == 0).all()
        assert as_set(MonomialIdeal(a, 0, bottom[:, :a])) == as_set(complete_graph_power_generators(a, n))
        assert as_set(MonomialIdeal(a, b, strata[n])) == as_set(cross_power_generators(a, b, n))


def test_primary_decomposition_examples():
    assert primary_decomposition(1, 4).names() == [["x1"], ["y1", "y2", "y3", "y4"]]
    names = primary_decomposition(3, 4).names()
    ys = ["y1", "y2", "y3", "y4"]
    assert names == [["x1", "x2", "x3"], ["x2", "x3"] + ys, ["x1", "x3"] + ys, ["x1", "x2"] + ys]
    assert sorted(len(c) for c in primary_decomposition(2, 2).components) == [2, 3, 3]
    with pytest.raises(ValueError):
        primary_decomposition(0, 3)


def test_verify_primary_decomposition_examples():
    assert verify_primary_decomposition(ring_model(6, 3))
    assert verify_primary_decomposition(ring_model(8, 2))
    m = edge_ideal_ab(2, 2)
    assert verify_primary_decomposition(m)
    dec = primary_decomposition(2, 2)
    assert not verify_primary_decomposition(m, dec.without(0))
    with pytest.raises(ValueError):
        verify_primary_decomposition(edge_ideal_ab(0, 2))


def test_primary_decomposition_matches_python_intersection():
    a, b = 3, 2
    comps = primary_decomposition(a, b).components
    meet = None
    for c in comps:
        gens = set()
        for i in c:
            e = [0] * (a + b)
            e[i] = 1
            gens.add(tuple(e))
        meet = gens if meet is None else oracles.intersect_ideal(meet, gens)
    assert meet == oracles.split_edge_ideal(a, b)


def test_redundant_component_detected():
    m = edge_ideal_ab(2, 3)
    dec = primary_decomposition(2, 3)
    extra = type(dec)(2, 3, dec.components + (frozenset(range(5)),))
    assert not verify_primary_decomposition(m, extra)


@pytest.mark.parametrize("a, b", [(a, b) for a in range(1, 6) for b in range(1, 6)])
def test_height_law(a, b):
    sizes = sorted(len(c) for c in primary_decomposition(a, b).components)
    assert sizes[0] == a and all(s == a + b - 1 for s in sizes[1:])
    assert height_and_dim(a, b) == (a, b, b == 1)


def test_height_examples():
    assert height_and_dim(3, 4) == (3, 4, False)
    assert height_and_dim(2, 1) == (2, 1, True)
    assert height_and_dim(1, 4) == (1, 4, False)
    with pytest.raises(ValueError):
        height_and_dim(0, 2)


def test_zpm():
    assert zpm_mu(2, 3) == 15 == count_generators(3, 4, 1)
    assert zpm_mu(3, 2) == 13 == count_generators(2, 6, 1)
    assert zpm_mu(2, 2) == 2 == count_generators(1, 2, 1)
    for p, m in [(3, 2), (2, 2), (2, 3), (5, 2)]:
        r = make_ring([p ** m])
        (ideal,) = prime_ideals(r)
        g = build_graph(r, ideal)
        assert zpm_parameters(p, m) == (g.a, g.b)
        assert zpm_mu(p, m) == len(edge_ideal(g).ideal) == len(g.edges)
    with pytest.raises(ValueError):
        zpm_mu(4, 2)
    with pytest.raises(ValueError):
        zpm_mu(2, 1)


def test_zpm_matches_count_for_larger_parameters():
    for p in (2, 3, 5, 7, 11):
        for m in range(2, 6):
            a, b = zpm_parameters(p, m)
            assert zpm_mu(p, m) == count_generators(a, b, 1)


def test_counts_are_exact_for_large_parameters():
    # a Z_{p^m}-sized instance well past 64-bit range
    a, b = zpm_parameters(7, 6)
    value = count_generators(a, b, 12)
    assert value > 2**64
    assert value == sum(stratum_counts(a, b, 12))
    assert np.all(np.array(stratum_counts(3, 4, 3)) >= 0)
