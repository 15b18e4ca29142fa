from __future__ import annotations

import pytest

from hhe6.bimodule import BimoduleMap
from hhe6.e6.generators import instantiate_generator
from hhe6.e6.resolution import e6_resolution
from hhe6.e6.translate_tables import SIGN_FLIP, TABLES
from hhe6.e6.translates import (FIXTURE_FAMILIES, TranslateError, fixture_degrees, homotopy_witness,
                                instantiate_translate, lift_as_maps, maps_equal, square_commutes,
                                translate_fixture_check, twisted_translate)

from conftest import CHARS


def test_every_stage_is_tabulated():
    for i in FIXTURE_FAMILIES:
        assert {r0 for (j, r0) in TABLES if j == i} == set(range(11))
    assert SIGN_FLIP == {3, 5}


def test_case1_stage0_s2_is_diagonal():
    res = e6_resolution(2, 0)
    phi = instantiate_translate(res, 1, 0, 0)
    alg = res.alg
    for c, col in enumerate(phi.cols):
        assert list(col) == [c]
        ((a, b), v), = col[c].items()
        assert alg.basis[a].length == alg.basis[b].length == 0 and v == 1


def test_case2_stage1_s1():
    res = e6_resolution(1, 3)
    phi0, phi1 = instantiate_translate(res, 2, 0, 0), instantiate_translate(res, 2, 0, 1)
    assert sum(len(col) for col in phi1.cols) >= 1
    assert square_commutes(res, phi1, phi0, 0, 1)


def test_case2_does_not_apply_at_s2():
    with pytest.raises(TranslateError):
        instantiate_translate(e6_resolution(2, 3), 2, 0, 0)


def test_case24_stage10_s1():
    res = e6_resolution(1, 0)
    phi = instantiate_translate(res, 24, 0, 10)
    assert sorted((c, k) for c, col in enumerate(phi.cols) for k in col) == [(0, 0), (5, 0), (5, 5)]
    assert square_commutes(res, phi, instantiate_translate(res, 24, 0, 9), 0, 10)


@pytest.mark.parametrize("s", [1, 2])
@pytest.mark.parametrize("char", CHARS)
def test_fixture_checks(s, char):
    res = e6_resolution(s, char)
    for i in FIXTURE_FAMILIES:
        for t in fixture_degrees(i, s, char, res.period):
            rep = translate_fixture_check(res, i, t)
            assert rep.ok, (i, t, rep.failures[:3])
            assert rep.checked == 22 + 1 + 21


def test_applicable_families_at_s2():
    for char in CHARS:
        res = e6_resolution(2, char)
        fams = {i for i in FIXTURE_FAMILIES if fixture_degrees(i, 2, char, res.period)}
        assert fams == {1, 3}


def test_twist_rule_second_period():
    res = e6_resolution(1, 0)
    rep = translate_fixture_check(res, 3, 1, ell0=2)
    assert rep.ok, rep.failures[:3]


def test_sign_flip_is_needed():
    res = e6_resolution(1, 0)
    f = res.alg.field
    phi = twisted_translate(res, 3, 1, 11)
    neg = BimoduleMap(phi.alg, phi.domain, phi.codomain,
                      [{k: {key: f.neg(v) for key, v in ent.items()} for k, ent in col.items()} for col in phi.cols])
    assert square_commutes(res, phi, twisted_translate(res, 3, 1, 10), 1, 11)
    assert not square_commutes(res, neg, twisted_translate(res, 3, 1, 10), 1, 11)


@pytest.mark.parametrize("i, t", [(3, 1), (1, 0), (4, 12), (5, 13), (24, 0)])
def test_tables_homotopic_to_generic_lift(i, t):
    res = e6_resolution(1, 0)
    g = instantiate_generator(res, i, t)
    depth = 11
    psis = lift_as_maps(res, t, res.lift_cocycle(t, g.cochain, depth))
    phis = [twisted_translate(res, i, t, r0) for r0 in range(depth + 1)]
    assert maps_equal(phis[0], g.omega0)
    assert homotopy_witness(res, t, phis, psis) is not None


def test_homotopy_rejects_other_cocycle():
    res = e6_resolution(1, 0)
    g = instantiate_generator(res, 3, 1)
    psis = lift_as_maps(res, 1, res.lift_cocycle(1, g.cochain, 3))
    phis = [twisted_translate(res, 3, 1, r0) for r0 in range(4)]
    f = res.alg.field
    scaled = [BimoduleMap(p.alg, p.domain, p.codomain,
                          [{k: {key: f.add(v, v) for key, v in ent.items()} for k, ent in col.items()}
                           for col in p.cols]) for p in phis]
    assert homotopy_witness(res, 1, scaled, psis) is None


def test_missing_table():
    with pytest.raises(TranslateError):
        instantiate_translate(e6_resolution(1, 0), 6, 14, 0)
