from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhe6.field import (Echelon, FieldError, FieldSpec, LinearSolver, NoSolution, Scalar, field_arith, kernel,
                        matrix_kernel, matrix_rank, matrix_row_space, rank, row_space)

FIELDS = [FieldSpec(0), FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(7)]


def test_gf3_addition_wraps():
    f = FieldSpec(3)
    assert field_arith(Scalar.of(2, f), Scalar.of(2, f), "add").value == 1


def test_gf5_division():
    f = FieldSpec(5)
    assert field_arith(Scalar.of(4, f), Scalar.of(3, f), "div").value == 3


def test_rational_addition():
    f = FieldSpec.rational()
    got = field_arith(Scalar.of(Fraction(1, 2), f), Scalar.of(Fraction(1, 3), f), "add")
    assert got.value == Fraction(5, 6)


def test_division_by_zero():
    f = FieldSpec(5)
    with pytest.raises(ZeroDivisionError):
        field_arith(Scalar.of(1, f), Scalar.of(0, f), "div")
    with pytest.raises(ZeroDivisionError):
        FieldSpec(0).inv(Fraction(0))


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        Scalar.of(1, FieldSpec(3)) + Scalar.of(1, FieldSpec(5))


def test_unknown_op():
    f = FieldSpec(3)
    with pytest.raises(ValueError):
        field_arith(Scalar.of(1, f), Scalar.of(1, f), "pow")


@pytest.mark.parametrize("p", [1, 4, 9, 2**31 + 11, -3])
def test_bad_characteristics(p):
    with pytest.raises(FieldError):
        FieldSpec(p)


def test_characteristic_and_names():
    assert FieldSpec.prime(7).characteristic() == 7
    assert FieldSpec.rational().characteristic() == 0
    assert str(FieldSpec(0)) == "QQ" and str(FieldSpec(2)) == "GF(2)"


def test_canonical_forms():
    assert FieldSpec(5)(-1) == 4
    assert FieldSpec(5)(Fraction(1, 2)) == 3
    q = FieldSpec(0)(Fraction(6, -4))
    assert (q.numerator, q.denominator) == (-3, 2)
    assert FieldSpec(0).to_json(Fraction(1, 2)) == "1/2"
    assert FieldSpec(0).to_json(Fraction(4, 2)) == 2


def test_rational_precision_is_unbounded():
    f = FieldSpec(0)
    big = f(3) ** 200
    assert f.mul(big, f.inv(big)) == 1


def test_rank_examples():
    assert matrix_rank(FieldSpec(2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert matrix_rank(FieldSpec(3), [[0] * 7 for _ in range(4)]) == 0
    assert matrix_rank(FieldSpec(0), [[1, 2], [2, 4]]) == 1
    assert matrix_rank(FieldSpec(0), []) == 0


def test_characteristic_dependent_rank():
    m = [[1, 1], [1, -1]]
    assert matrix_rank(FieldSpec(2), m) == 1
    assert matrix_rank(FieldSpec(3), m) == 2


def test_kernel_and_row_space_are_reduced():
    f = FieldSpec(0)
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert matrix_row_space(f, m) == [[1, 0, 1], [0, 1, 1]]
    assert matrix_kernel(f, m) == [[1, 1, -1]]


def test_linear_solver():
    f = FieldSpec(5)
    cols = [{0: 1, 1: 1}, {1: 1}]
    sol = LinearSolver(f, cols).solve({0: 2, 1: 3})
    assert sol == {0: 2, 1: 1}
    with pytest.raises(NoSolution):
        LinearSolver(f, [{0: 1, 1: 1}]).solve({0: 1})
    with pytest.raises(NoSolution):
        LinearSolver(f, [{0: 1}]).solve({5: 1})


def _matrix(draw, p):
    rows = draw(st.integers(0, 6))
    cols = draw(st.integers(1, 6))
    entry = st.integers(-3, 3) if p == 0 else st.integers(0, p - 1)
    return [[draw(entry) for _ in range(cols)] for _ in range(rows)], cols


@st.composite
def field_and_matrix(draw):
    f = draw(st.sampled_from(FIELDS))
    m, n = _matrix(draw, f.p)
    return f, m, n


@given(field_and_matrix())
def test_rank_nullity(data):
    f, m, n = data
    assert matrix_rank(f, m) + len(matrix_kernel(f, m, n)) == n


@given(field_and_matrix(), st.randoms(use_true_random=False))
def test_rank_invariant_under_permutations(data, rnd):
    f, m, n = data
    perm_rows = list(m)
    rnd.shuffle(perm_rows)
    cperm = list(range(n))
    rnd.shuffle(cperm)
    permuted = [[row[c] for c in cperm] for row in perm_rows]
    assert matrix_rank(f, permuted) == matrix_rank(f, m)


@given(field_and_matrix())
def test_kernel_vectors_are_annihilated(data):
    f, m, n = data
    for v in matrix_kernel(f, m, n):
        for row in m:
            acc = f.zero()
            for a, b in zip(row, v):
                acc = f.add(acc, f.mul(f(a), b))
            assert acc == 0


@given(st.sampled_from(FIELDS), st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_field_axioms(f, xs):
    a, b, c = (f(x) for x in xs)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    if b:
        assert f.mul(f.div(a, b), b) == a


@given(field_and_matrix())
def test_echelon_membership(data):
    f, m, _ = data
    sparse = [{k: f(x) for k, x in enumerate(row) if f(x)} for row in m]
    e = Echelon(f)
    for r in sparse:
        e.add(r)
    assert all(r in e for r in sparse)
    assert e.rank == rank(f, sparse) == len(row_space(f, sparse))
    assert len(kernel(f, sparse, len(m[0]) if m else 0)) == (len(m[0]) if m else 0) - e.rank
