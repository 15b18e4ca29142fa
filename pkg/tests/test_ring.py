from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhe6.e6.generators import (GeneratorError, admissible, generator_list, instantiate_generator, kappa,
                                kappa_alpha)
from hhe6.e6.quiver import sigma_order
from hhe6.e6.resolution import e6_resolution
from hhe6.e6.ring import (X, RingContext, relation_set, verify_factorization_lemma, verify_generation,
                          verify_worked_example)

from conftest import CHARS


def ctx(s, char) -> RingContext:
    return RingContext(e6_resolution(s, char))


@pytest.mark.parametrize("s", [1, 2])
def test_kappa_trivial_power_and_order(s):
    res = e6_resolution(s, 0)
    order = sigma_order(s, 0)
    for w in range(res.alg.dim):
        assert kappa(res.alg, s, w, 0) == 1
        assert kappa(res.alg, s, w, order) == 1
    assert all(kappa_alpha(s, i, order) == 1 for i in range(6 * s))


def test_y3_at_s2():
    res = e6_resolution(2, 3)
    g = instantiate_generator(res, 3, 1)
    entries = [(k, c) for c, col in enumerate(g.omega0.cols) for k, ent in col.items() if ent]
    assert entries == [(0, 0), (0, 2)]


def test_y24_at_s1():
    res = e6_resolution(1, 0)
    g = instantiate_generator(res, 24, 0)
    entries = [(k, c, ent) for c, col in enumerate(g.omega0.cols) for k, ent in col.items() if ent]
    assert len(entries) == 1
    k, c, ent = entries[0]
    assert (k, c) == (5, 5)
    ((a, b), v), = ent.items()
    alg = res.alg
    assert alg.basis[a].length == 4 and alg.basis[b].length == 0 and v == 1


def test_non_generator_rejected():
    res = e6_resolution(2, 2)
    with pytest.raises(GeneratorError):
        instantiate_generator(res, 4, 1)
    with pytest.raises(GeneratorError):
        instantiate_generator(res, 99, 0, check_admissible=False)


@pytest.mark.parametrize("s", [1, 2])
@pytest.mark.parametrize("char", CHARS)
def test_generators_are_nonzero_cocycles(s, char):
    c = ctx(s, char)
    for i, t in c.generators():
        g = c.generator(i, t)
        H = c.res.cohomology(t)
        assert H.is_cocycle(g.cochain)
        assert any(H.class_vector(g.cochain))


@pytest.mark.parametrize("s", [1, 2])
@pytest.mark.parametrize("char", CHARS)
def test_generation(s, char):
    rep = verify_generation(ctx(s, char))
    assert rep.ok, rep.failures
    assert rep.degrees == e6_resolution(s, char).period


def test_generation_examples():
    assert verify_generation(ctx(1, 2)).degrees == 22
    c = ctx(2, 3)
    assert c.res.hh_dim(0) == 1 and [i for i, t in c.generators() if t == 0] == [1]
    c = ctx(1, 0)
    assert c.res.hh_dim(0) == 3 and sorted(i for i, t in c.generators() if t == 0) == [1, 23, 24]


@pytest.mark.parametrize("s", [1, 2])
@pytest.mark.parametrize("char", CHARS)
def test_relations_exact(s, char):
    c = ctx(s, char)
    checks = c.verify_relations()
    assert checks
    bad = [(x.relation, x.a, x.b) for x in checks if not x.exact]
    assert not bad
    assert all(x.up_to_unit for x in checks)


def _find(checks, a, b):
    return [x for x in checks if x.a[0] == a and x.b[0] == b]


def test_numbered_relation_branches_s1():
    two, five, three = (ctx(1, c).verify_relations() for c in (2, 5, 3))
    (r1,) = [x for x in _find(two, 4, 6)]
    assert r1.relation == "r1" and r1.expected == X(8) and r1.exact and any(r1.computed)
    assert all(x.exact and not any(x.computed) for x in _find(five, 4, 6))
    r2 = _find(three, 6, 6)
    assert r2 and all(x.expected == X(14, -1, 1) and x.exact and any(x.computed) for x in r2)


def test_s2_relation_scope():
    # at s = 2 only few families are generators, so few relations are exercised
    for char in CHARS:
        names = {x.relation for x in ctx(2, char).verify_relations()}
        assert "r6" in names and "r1" not in names


def test_s1_extra_relation_char3():
    checks = ctx(1, 3).verify_relations()
    got = _find(checks, 22, 24)
    assert got and all(x.expected == X(21, -1) and x.exact for x in got)
    assert not _find(ctx(1, 0).verify_relations(), 22, 24)


def test_duplicate_zero_row_reports_both():
    names = {(x.relation, x.b[0]) for x in ctx(1, 3).verify_relations() if x.a[0] == 3}
    assert ("X3-zero", 21) in names and ("X3-zero-dup", 22) in names


@pytest.mark.parametrize("s", [1, 2])
@pytest.mark.parametrize("char", CHARS)
def test_factorization_and_worked_example(s, char):
    c = ctx(s, char)
    fac = verify_factorization_lemma(c)
    assert all(w.exact for w in fac)
    assert all(w.exact for w in verify_worked_example(c))


def test_factorization_items_s1():
    fac = verify_factorization_lemma(ctx(1, 0))
    targets = {w.target[0]: w.factors for w in fac}
    assert set(targets) == {5, 10, 17, 19, 21}
    assert targets[21][0][0] == 3 and targets[21][1][0] == 20
    assert targets[10][1][0] == 6


def test_unit_row():
    c = ctx(1, 5)
    for i, t in c.generators():
        assert c.product_class((1, 0), (i, t)) == c.generator_class(i, t)


def test_product_json():
    c = ctx(1, 0)
    data = c.verify_relations()[0].to_json(c.field)
    assert {"relation", "lhs", "degree", "expected", "computed_class", "expected_class", "pass",
            "pass_up_to_unit"} == set(data)


@given(st.integers(0, 10**6))
def test_graded_commutativity(seed):
    rnd = random.Random(seed)
    char = rnd.choice(CHARS)
    c = ctx(1, char)
    gens = [g for g in c.generators() if g[1] < 16]
    a, b = rnd.choice(gens), rnd.choice(gens)
    if a[1] + b[1] >= 2 * c.M:
        return
    assert c.product_class(a, b) == c.product_class(b, a)


def test_relation_set_sizes():
    assert len(relation_set(1)) > len(relation_set(2))
    assert all(admissible(i, 1, 0, t, 44) for i, t in generator_list(1, 0))
