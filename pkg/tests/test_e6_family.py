from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhe6.e6 import tables
from hhe6.e6.dims import classify_degree, compare_dims, congruence, expected_dims, period_data
from hhe6.e6.happel import happel_check, printed_terms
from hhe6.e6.quiver import (build_e6_quiver, e6_algebra, label_vertex, period, sigma_order, sigma_order_formula,
                            sigma_power, sigma_vertex, vertex_label)
from hhe6.e6.resolution import E6Resolution, Mutation, ResolutionError, e6_resolution, term_summands_from_formula
from hhe6.e6.verify import expected_term, verify_resolution
from hhe6.modules import is_simple_at, simple_resolution

from conftest import CHARS


@pytest.mark.parametrize("s", [1, 2, 3])
def test_quiver_shape(s):
    q = build_e6_quiver(s)
    assert q.n_vertices == 6 * s
    names = [a.name for a in q.arrows]
    assert sum(n.startswith("a") for n in names) == 6 * s
    assert sum(n.startswith("g") for n in names) == s


@given(st.integers(1, 6), st.integers(-200, 200))
def test_labels_round_trip(s, label):
    v = label_vertex(label, s)
    assert 0 <= v < 6 * s
    assert label_vertex(vertex_label(v, s), s) == v
    assert vertex_label(v, s) % 4 == label % 4


def test_sigma_vertex_shift():
    # the label shift is 4(6+s); at s=1 that is 28
    for v in range(6):
        assert vertex_label(sigma_vertex(v, 1), 1) % 4 == vertex_label(v, 1) % 4
        assert sigma_vertex(v, 1) == label_vertex(vertex_label(v, 1) + 28, 1)


def test_sigma_orders():
    assert sigma_order(1, 0) == 4
    assert sigma_order(2, 2) == 1
    for s in range(1, 7):
        for char in CHARS:
            assert sigma_order(s, char) == sigma_order_formula(s, char) == period_data(s, char).order
            assert period(s, char) == 11 * sigma_order(s, char)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_sigma_is_multiplicative(s):
    alg = e6_algebra(s, 0)
    sp = sigma_power(s, 1)
    img = [alg.automorphism_image(sp.vertex_map, sp.arrow_map, k) for k in range(alg.dim)]
    for a, b in itertools.product(range(alg.dim), repeat=2):
        lhs = alg.apply_automorphism(sp.vertex_map, sp.arrow_map, alg.mul_basis(a, b))
        assert lhs == alg.mul(img[a], img[b])


def test_sigma_powers_compose():
    for s in (1, 2):
        one, two = sigma_power(s, 1), sigma_power(s, 2)
        for a, (sign, b) in one.arrow_map.items():
            sign2, c = one.arrow_map[b]
            assert two.arrow_map[a] == (sign * sign2, c)


def test_term_counts():
    res = e6_resolution(2, 3)
    assert len(res.term(0)) == 12 and len(res.term(1)) == 14
    for t in range(11):
        assert Counter(res.term(t)) == Counter(term_summands_from_formula(2, t))


@pytest.mark.parametrize("s, char", [(1, 0), (1, 3), (2, 0), (2, 5)])
def test_terms_twist_into_next_period(s, char):
    res = e6_resolution(s, char)
    for t in range(11, 2 * res.period):
        assert Counter(res.term(t)) == expected_term(s, t)
    sp = sigma_power(s, 1)
    assert Counter(res.term(11)) == Counter((sp.vertex_map[i], j) for i, j in res.term(0))


def test_differential_shapes():
    res = e6_resolution(2, 0)
    assert [res.differential(r).shape for r in range(4)] == [(14, 12), (12, 14), (16, 12), (18, 16)]
    for r in range(11):
        ncols, nrows = tables.SHAPES[r]
        assert res.differential(r).shape == (ncols * 2, nrows * 2)


def test_square_zero_s1_gf3():
    res = e6_resolution(1, 3)
    assert all(res.check_square_zero(r) for r in range(10))


def test_seam_s2_gf2():
    res = e6_resolution(2, 2)
    assert res.check_square_zero(10)
    assert res.check_square_zero(21)
    res1 = e6_resolution(1, 0)
    assert all(res1.check_square_zero(t) for t in (10, 21, 32, 43))


def test_twisted_differential_is_generated():
    res = e6_resolution(1, 0)
    sp = sigma_power(1, 1)
    assert res.differential(11).cols == res.differential(0).twisted_left(sp.vertex_map, sp.arrow_map).cols


@pytest.mark.parametrize("s", [1, 2])
def test_happel(s):
    res = e6_resolution(s, 0)
    rep = happel_check(s, 0, res.term, 9)
    assert rep.ok, rep.failures
    assert rep.checked > 0


def test_syzygy_statements():
    s = 1
    alg = e6_algebra(s, 2)
    for r in range(2 * s):
        for k, deg, want in ((1, 2, 4 * (r + 1) + 2), (3, 2, 4 * (r + 2)), (0, 9, 4 * (r + 4) + 3),
                             (2, 9, 4 * (r + s + 5) + 1)):
            sr = simple_resolution(alg, label_vertex(4 * r + k, s), deg)
            assert is_simple_at(sr.syzygies[deg], label_vertex(want, s))
            assert printed_terms(s, k, r)[1:] == (deg, want)


def test_ext_one_matches_q1():
    res = e6_resolution(1, 0)
    alg = res.alg
    got = Counter(res.term(1))
    want = Counter()
    for j in range(6):
        sr = simple_resolution(alg, j, 1)
        for i in sr.terms[1]:
            want[(i, j)] += 1
    assert got == want


def test_unresolvable_mutation_is_a_build_error():
    with pytest.raises(ResolutionError):
        E6Resolution(1, 0, Mutation(9))


def test_classify_examples():
    assert 1 in classify_degree(2, 3, 0).matched
    assert 10 not in classify_degree(2, 5, 4).matched
    assert congruence(2, 4) == 2
    assert 3 in classify_degree(1, 2, 1).matched


@pytest.mark.parametrize("s", [2, 3, 4])
def test_classification_unique(s):
    for char in CHARS:
        for t in range(2 * period(s, char)):
            assert len(classify_degree(s, char, t).matched) <= 1


def test_s1_collisions_are_the_known_ones():
    found = set()
    for char in CHARS:
        for t in range(2 * period(1, char)):
            m = classify_degree(1, char, t).matched
            if len(m) > 1:
                found.add((char, t % 22, m))
    assert found == {(3, 0, (1, 2)), (3, 6, (14, 15)), (3, 15, (9, 10)), (3, 21, (21, 22))}


def test_expected_dims_examples():
    assert expected_dims(2, 0, 0).hom == 12
    assert expected_dims(2, 3, 0).im == 11
    for char in CHARS:
        assert expected_dims(1, char, 0).hh == 3


@pytest.mark.parametrize("s", [1, 2, 3])
def test_expected_dims_consistent(s):
    for char in CHARS:
        for t in range(2 * period(s, char)):
            e = expected_dims(s, char, t)
            assert e.hh == e.hh_from_ranks


def test_dims_s2_char2_window():
    rows = compare_dims(e6_resolution(2, 2), range(22))
    assert all(r.ok for r in rows)


def test_periodicity_of_hh():
    for s, char in ((1, 0), (1, 3), (2, 2), (2, 5)):
        res = e6_resolution(s, char)
        M = res.period
        assert [res.hh_dim(t) for t in range(1, 12)] == [res.hh_dim(t + M) for t in range(1, 12)]


def test_verify_resolution_rows():
    rows = verify_resolution(1, 0, 22)
    assert all(r.ok for r in rows)
    assert {r.check for r in rows} == {"build", "shape", "augmentation", "d^2=0", "exactness", "happel"}
    assert any(r.check == "d^2=0" and r.degree == 21 for r in rows)


@pytest.mark.parametrize("degree", range(11))
def test_every_mutation_is_caught(degree):
    rows = verify_resolution(2, 3, 11, Mutation(degree), happel=False)
    assert any(not r.ok for r in rows)
