from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhe6.bimodule import BimoduleError, BimoduleMap, compose_chain, sum_dim
from hhe6.demo import dual_numbers, dual_numbers_resolution
from hhe6.e6.generators import instantiate_generator
from hhe6.e6.resolution import E6Resolution, Mutation, e6_resolution
from hhe6.e6.translates import homotopy_witness, lift_as_maps
from hhe6.field import FieldSpec, kernel, rank, vec_axpy
from hhe6.e6.ring import compose_cochain

from conftest import CHARS
from helpers import as_stage, random_cocycle, random_map


def identity_map(alg, summands) -> BimoduleMap:
    one = alg.field.one()
    cols = [{c: {(alg.idempotents[i], alg.idempotents[j]): one}} for c, (i, j) in enumerate(summands)]
    return BimoduleMap(alg, tuple(summands), tuple(summands), cols)


def dense(field, cols, dom, cod):
    index = {b: n for n, b in enumerate(cod)}
    return [[c.get(b, field.zero()) for b in cod] for c in cols], index


def test_compose_with_identity():
    res = e6_resolution(1, 3)
    d = res.differential(2)
    assert d.compose(identity_map(res.alg, d.domain)).cols == d.cols
    assert identity_map(res.alg, d.codomain).compose(d).cols == d.cols


def test_dual_numbers_square_zero():
    for char in CHARS:
        res = dual_numbers_resolution(char)
        for t in range(6):
            assert res.check_square_zero(t)


def test_incompatible_composition():
    res = e6_resolution(1, 0)
    with pytest.raises(BimoduleError):
        res.differential(0).compose(res.differential(2))


def test_validate_rejects_wrong_corner():
    alg = dual_numbers(0)
    x = 1 if alg.basis[1].length else 0
    m = BimoduleMap(alg, ((0, 0),), ((0, 0),), [{3: {(x, x): 1}}])
    with pytest.raises(BimoduleError):
        m.validate()
    with pytest.raises(BimoduleError):
        BimoduleMap(alg, ((0, 0),), ((0, 0),), [])


def test_underlying_matrix_small_cases():
    alg = dual_numbers(5)
    zero = BimoduleMap(alg, ((0, 0),), ((0, 0),), [{}])
    _, _, cols = zero.underlying_matrix()
    assert cols == [{}] * 4
    dom, cod, cols = identity_map(alg, ((0, 0),)).underlying_matrix()
    assert len(dom) == len(cod) == 4
    assert cols == [{b: 1} for b in cod]


def test_e6_d0_rank_nullity():
    res = e6_resolution(1, 0)
    d0 = res.differential(0)
    dom, cod, cols = d0.underlying_matrix()
    f = res.field
    index = {b: n for n, b in enumerate(cod)}
    rows: dict = {}
    for c, img in enumerate(cols):
        for key, v in img.items():
            rows.setdefault(index[key], {})[c] = v
    nullity = len(kernel(f, list(rows.values()), len(dom)))
    assert d0.rank() == len(dom) - nullity == rank(f, [{index[k]: v for k, v in img.items()} for img in cols])
    assert len(dom) == sum_dim(res.alg, res.term(1))


def test_dual_numbers_exact():
    for char in CHARS:
        res = dual_numbers_resolution(char)
        assert res.check_augmentation() and res.augmentation_exact()
        assert all(res.verify_exactness(t) for t in range(6))


def test_e6_exact_gf2():
    res = e6_resolution(1, 2)
    assert all(res.verify_exactness(t) for t in range(11))


def test_corrupted_d3_fails_at_degree_3():
    res = E6Resolution(1, 2, Mutation(3))
    assert [res.check_square_zero(t) for t in range(6)] == [True, True, False, False, True, True]
    assert res.verify_exactness(1) and not res.verify_exactness(2)


def test_cochain_dimensions():
    res = e6_resolution(2, 3)
    assert res.cohomology(0).cochain_dim == 12
    assert res.cohomology(1).cochain_dim == 14
    dn = dual_numbers_resolution(0)
    assert {dn.cohomology(t).cochain_dim for t in range(5)} == {2}


def test_cohomology_examples():
    for char in CHARS:
        assert e6_resolution(1, char).hh_dim(0) == 3
    assert e6_resolution(2, 3).hh_dim(0) == 1
    assert e6_resolution(2, 5).hh_dim(3) == 0


@pytest.mark.parametrize("s, char, t", [(1, 0, 4), (2, 3, 7), (1, 2, 12)])
def test_hom_dimension_two_ways(s, char, t):
    res = e6_resolution(s, char)
    H = res.cohomology(t)
    alg = res.alg
    assert H.cochain_dim == sum(len(alg.corner_basis(i, j)) for i, j in res.term(t))
    assert len(H.kernel) + res.cohomology(t + 1).image_dim == H.cochain_dim


def test_unit_lifts_to_identity():
    res = e6_resolution(1, 0)
    alg = res.alg
    unit = {(k, alg.idempotents[i]): 1 for k, (i, _) in enumerate(res.term(0))}
    for k, phi in enumerate(res.lift_cocycle(0, unit, 6)):
        assert phi == {c: {(c, alg.idempotents[i], alg.idempotents[j]): 1}
                       for c, (i, j) in enumerate(res.term(k))}


def test_dual_numbers_lift_is_periodic():
    res = dual_numbers_resolution(2)
    alg = res.alg
    x = next(k for k, p in enumerate(alg.basis) if p.length == 1)
    e = alg.idempotents[0]
    H = res.cohomology(1)
    gen = {(0, e): 1}
    assert H.is_cocycle(gen) and any(H.class_vector(gen))
    phis = res.lift_cocycle(1, gen, 6)
    assert phis[2] == phis[4] == phis[6]
    assert phis[1] == phis[3] == phis[5]
    assert phis[0] == {0: {(0, e, e): 1}}
    assert x != e


def test_lift_rejects_non_cocycle():
    res = e6_resolution(1, 0)
    cochain = {res.cochain_basis(1)[0]: 1}
    assert not res.cohomology(1).is_cocycle(cochain)
    with pytest.raises(BimoduleError):
        res.lift_cocycle(1, cochain, 3)


def test_unit_cup_product():
    res = e6_resolution(1, 0)
    alg = res.alg
    unit = {(k, alg.idempotents[i]): 1 for k, (i, _) in enumerate(res.term(0))}
    y = instantiate_generator(res, 4, 12)
    H = res.cohomology(12)
    want = H.class_vector(y.cochain)
    assert H.class_vector(res.cup_product(0, unit, 12, y.cochain)) == want
    assert H.class_vector(res.cup_product(12, y.cochain, 0, unit)) == want


def test_worked_product_s1():
    res = e6_resolution(1, 2)
    y3, y4, y5 = (instantiate_generator(res, i, t) for i, t in ((3, 1), (4, 12), (5, 13)))
    H = res.cohomology(13)
    assert H.class_vector(res.cup_product(1, y3.cochain, 12, y4.cochain)) == H.class_vector(y5.cochain)


def test_x3_x2_vanishes_s1_gf5():
    res = e6_resolution(1, 5)
    y2 = instantiate_generator(res, 2, 0, check_admissible=False)
    y3 = instantiate_generator(res, 3, 1)
    assert not any(res.cohomology(1).class_vector(res.cup_product(1, y3.cochain, 0, y2.cochain)))


def test_bimodule_map_json():
    res = e6_resolution(1, 0)
    data = res.differential(0).to_json()
    assert len(data["domain"]) == len(res.term(1)) and len(data["codomain"]) == len(res.term(0))
    assert all({"row", "col", "coeff", "left", "right"} <= set(e) for e in data["entries"])


# -- properties --------------------------------------------------------------


@given(st.integers(0, 10**6), st.sampled_from([(1, 0), (1, 3), (2, 2)]), st.integers(0, 9))
def test_functoriality(seed, params, t):
    s, char = params
    res = e6_resolution(s, char)
    rnd = random.Random(seed)
    g = random_map(res.alg, res.term(t + 2), res.term(t + 1), rnd, 0.15)
    fmap = random_map(res.alg, res.term(t + 1), res.term(t), rnd, 0.15)
    dom, _, gcols = g.underlying_matrix()
    _, _, fcols = fmap.underlying_matrix()
    _, _, hcols = fmap.compose(g).underlying_matrix()
    fld = res.field
    index = {b: n for n, b in enumerate(sum_basis_keys(res, t + 1))}
    for gc, hc in zip(gcols, hcols):
        acc: dict = {}
        for key, v in gc.items():
            vec_axpy(fld, acc, v, fcols[index[key]])
        assert acc == hc


def sum_basis_keys(res, t):
    from hhe6.bimodule import sum_basis
    return sum_basis(res.alg, res.term(t))


@given(st.integers(0, 10**6), st.sampled_from([0, 2, 3]), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_cup_associative_dual_numbers(seed, char, ta, tb, tc):
    res = dual_numbers_resolution(char)
    rnd = random.Random(seed)
    a, b, c = (random_cocycle(res, t, rnd) for t in (ta, tb, tc))
    ab = res.cup_product(ta, a, tb, b)
    bc = res.cup_product(tb, b, tc, c)
    lhs = res.cup_product(ta + tb, ab, tc, c)
    rhs = res.cup_product(ta, a, tb + tc, bc)
    H = res.cohomology(ta + tb + tc)
    assert H.class_vector(lhs) == H.class_vector(rhs)


@given(st.integers(0, 10**6))
def test_cup_associative_e6(seed):
    res = e6_resolution(1, 0)
    rnd = random.Random(seed)
    degs = rnd.choice([(0, 1, 12), (1, 0, 1), (0, 0, 6), (1, 1, 0)])
    a, b, c = (random_cocycle(res, t, rnd) for t in degs)
    ta, tb, tc = degs
    lhs = res.cup_product(ta + tb, res.cup_product(ta, a, tb, b), tc, c)
    rhs = res.cup_product(ta, a, tb + tc, res.cup_product(tb, b, tc, c))
    H = res.cohomology(ta + tb + tc)
    assert H.class_vector(lhs) == H.class_vector(rhs)


@given(st.integers(0, 10**6), st.sampled_from([(3, 1, 4, 12), (3, 1, 6, 14), (6, 14, 15, 6), (4, 12, 15, 6)]))
def test_relift_invariance(seed, pair):
    """Perturbing a lift by a random homotopy leaves product classes unchanged."""
    ia, ta, ib, tb = pair
    res = e6_resolution(1, 0)
    rnd = random.Random(seed)
    ya, yb = instantiate_generator(res, ia, ta), instantiate_generator(res, ib, tb)
    phis = lift_as_maps(res, tb, res.lift_cocycle(tb, yb.cochain, ta))
    hs = [random_map(res.alg, res.term(tb + k), res.term(k + 1), rnd, 0.05) for k in range(ta + 1)]
    k = ta
    moved = res.differential(k).compose(hs[k])
    if k:
        moved = _add(moved, hs[k - 1].compose(res.differential(tb + k - 1)))
    perturbed = _add(phis[k], moved)
    H = res.cohomology(ta + tb)
    base = H.class_vector(compose_cochain(res, ya.cochain, as_stage(phis[k])))
    assert H.class_vector(compose_cochain(res, ya.cochain, as_stage(perturbed))) == base


def _add(f1: BimoduleMap, f2: BimoduleMap) -> BimoduleMap:
    fld = f1.alg.field
    cols = []
    for a, b in zip(f1.cols, f2.cols):
        col = {k: dict(v) for k, v in a.items()}
        for k, ent in b.items():
            vec_axpy(fld, col.setdefault(k, {}), fld.one(), ent)
        cols.append({k: v for k, v in col.items() if v})
    return BimoduleMap(f1.alg, f1.domain, f1.codomain, cols)


def test_homotopy_witness_between_lifts():
    res = e6_resolution(1, 3)
    y = instantiate_generator(res, 3, 1)
    phis = lift_as_maps(res, 1, res.lift_cocycle(1, y.cochain, 5))
    rnd = random.Random(11)
    hs = [random_map(res.alg, res.term(1 + k), res.term(k + 1), rnd, 0.05) for k in range(6)]
    psis = []
    for k, phi in enumerate(phis):
        moved = res.differential(k).compose(hs[k])
        if k:
            moved = _add(moved, hs[k - 1].compose(res.differential(k)))
        psis.append(_add(phi, moved))
    assert homotopy_witness(res, 1, phis, psis) is not None


def test_compose_chain():
    res = e6_resolution(2, 3)
    assert compose_chain([res.differential(0), res.differential(1)]).is_zero()
    assert FieldSpec(3) == res.field
