from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhe6.bimodule import sum_dim
from hhe6.demo import dual_numbers
from hhe6.e6.quiver import e6_algebra, e6_relations
from hhe6.field import FieldSpec
from hhe6.pathalg import (Algebra, AmbiguousPath, ArrowLabel, NoPath, Quiver, QuiverError, load_quiver, make_path,
                          quiver_from_json, quiver_to_json, trivial)

from conftest import CHARS


def a3(char: int = 0) -> Algebra:
    q = Quiver(("0", "1", "2"), (ArrowLabel("a", 0, 1), ArrowLabel("b", 1, 2)))
    return Algebra(q, FieldSpec(char), [], 3)


def test_dual_numbers_basis():
    alg = dual_numbers(0)
    assert alg.dim == 2
    assert sorted(alg.basis[k].length for k in alg.corner_basis(0, 0)) == [0, 1]


def test_a3_dimension_and_corners():
    alg = a3()
    assert alg.dim == 6
    (k,) = alg.corner_basis(2, 0)
    assert alg.basis[k].length == 2
    assert alg.unique_path(0, 2) == k
    assert alg.path_name(k) == "b*a"


def test_unique_path_errors():
    with pytest.raises(AmbiguousPath):
        dual_numbers(2).unique_path(0, 0)
    with pytest.raises(NoPath):
        a3().unique_path(2, 0)
    assert dual_numbers(2).basis[dual_numbers(2).unique_path(0, 0, length=1)].length == 1


def test_projective_dimensions():
    assert sum_dim(dual_numbers(3), [(0, 0)]) == 4
    alg = a3()
    for i, j in itertools.product(range(3), repeat=2):
        assert sum_dim(alg, [(i, j)]) == len(alg.left_basis(i)) * len(alg.right_basis(j))
    # A e_0 holds the three paths leaving 0 and e_2 A the three paths arriving at 2
    assert sum_dim(alg, [(0, 2)]) == 9
    assert sum_dim(alg, [(2, 2)]) == 3


def test_composition_order():
    alg = a3()
    a = alg.unique_path(0, 1)
    b = alg.unique_path(1, 2)
    assert alg.mul_basis(b, a) == {alg.unique_path(0, 2): 1}
    assert alg.mul_basis(a, b) == {}


def test_relation_kills_path():
    q = Quiver(("0", "1", "2"), (ArrowLabel("a", 0, 1), ArrowLabel("b", 1, 2)))
    alg = Algebra(q, FieldSpec(5), [{(0, 1): 1}], 3)
    assert alg.dim == 5
    assert alg.normal_form(make_path(q, [0, 1])) == {}


def test_bad_quivers():
    with pytest.raises(QuiverError):
        Quiver(("0",), (ArrowLabel("a", 0, 1),))
    with pytest.raises(QuiverError):
        Quiver(("0",), (ArrowLabel("a", 0, 0), ArrowLabel("a", 0, 0)))
    q = Quiver(("0", "1"), (ArrowLabel("a", 0, 1),))
    with pytest.raises(QuiverError):
        make_path(q, [0, 0])
    with pytest.raises(QuiverError):
        quiver_from_json({"vertices": []})


def test_json_round_trip(tmp_path):
    alg = e6_algebra(1, 3)
    data = quiver_to_json(alg.quiver, e6_relations(1), alg.field)
    path = tmp_path / "q.json"
    path.write_text(json.dumps(data))
    q, rels = load_quiver(path)
    assert q == alg.quiver
    again = Algebra(q, FieldSpec(3), rels, 5)
    assert again.dim == alg.dim


def test_identity_automorphism():
    alg = e6_algebra(2, 0)
    ident = {a: (1, a) for a in range(len(alg.quiver.arrows))}
    x = {k: alg.field(k + 1) for k in range(alg.dim)}
    assert alg.apply_automorphism(range(alg.quiver.n_vertices), ident, x) == x


def test_incompatible_automorphism():
    alg = a3()
    with pytest.raises(QuiverError):
        alg.apply_automorphism([0, 1, 2], {0: (1, 1), 1: (1, 0)}, {alg.unique_path(0, 1): 1})


# [DERIVED] dimensions of the E6 algebras, frozen from the first computation
@pytest.mark.parametrize("s, dim", [(1, 34), (2, 68), (3, 102)])
def test_e6_dimension(s, dim):
    for char in CHARS:
        assert e6_algebra(s, char).dim == dim


@pytest.mark.parametrize("s", [1, 2])
def test_idempotents_and_associativity(s):
    alg = e6_algebra(s, 3)
    f = alg.field
    es = alg.idempotents
    for u in es:
        for v in es:
            assert alg.mul_basis(u, v) == ({u: 1} if u == v else {})
    one = {e: f.one() for e in es}
    for k in range(alg.dim):
        assert alg.mul(one, {k: 1}) == {k: 1} == alg.mul({k: 1}, one)
    n = alg.dim
    for a, b, c in itertools.product(range(n), repeat=3):
        assert alg.mul(alg.mul_basis(a, b), {c: 1}) == alg.mul({a: 1}, alg.mul_basis(b, c))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_relations_and_nilpotency(s):
    alg = e6_algebra(s, 0)
    q = alg.quiver
    for rel in e6_relations(s):
        acc: dict = {}
        for word, c in rel.items():
            for k, v in alg.element(make_path(q, list(word)), c).items():
                acc[k] = acc.get(k, 0) + v
        assert not any(acc.values())
    assert max(p.length for p in alg.basis) == 4


@given(st.integers(0, 67), st.integers(0, 67), st.integers(0, 67))
def test_associativity_sampled(a, b, c):
    alg = e6_algebra(2, 5)
    lhs = alg.mul(alg.mul_basis(a, b), {c: 1})
    rhs = alg.mul({a: 1}, alg.mul_basis(b, c))
    assert lhs == rhs


def test_trivial_path():
    p = trivial(3)
    assert p.length == 0 and p.source == p.target == 3
