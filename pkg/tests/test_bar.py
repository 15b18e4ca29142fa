from __future__ import annotations

import pytest

from hhe6.bar import BarComplex, OracleResourceError, bar_hh_dim
from hhe6.demo import dual_numbers, dual_numbers_resolution
from hhe6.e6.quiver import e6_algebra
from hhe6.e6.resolution import e6_resolution

from conftest import CHARS


def test_dual_numbers_char2():
    alg = dual_numbers(2)
    assert [bar_hh_dim(alg, t) for t in range(3)] == [2, 2, 2]


def test_dual_numbers_char0():
    alg = dual_numbers(0)
    assert [bar_hh_dim(alg, t) for t in range(3)] == [2, 1, 1]


@pytest.mark.parametrize("char", [0, 2, 3])
def test_dual_numbers_against_resolution(char):
    bar = BarComplex(dual_numbers(char), 4)
    res = dual_numbers_resolution(char)
    assert [bar.hh_dim(t) for t in range(5)] == [res.hh_dim(t) for t in range(5)]
    assert bar.hh_dim(0) == dual_numbers(char).center_dim()


def test_e6_degree_zero():
    assert bar_hh_dim(e6_algebra(1, 2), 0) == 3


@pytest.mark.parametrize("s, char, t_max", [(1, 0, 3), (1, 2, 3), (1, 3, 3), (1, 5, 3), (2, 0, 2), (2, 2, 2),
                                            (2, 3, 2), (2, 5, 2)])
def test_e6_agreement(s, char, t_max):
    bar = BarComplex(e6_algebra(s, char), t_max)
    res = e6_resolution(s, char)
    assert [bar.hh_dim(t) for t in range(t_max + 1)] == [res.hh_dim(t) for t in range(t_max + 1)]
    assert bar.hh_dim(0) == e6_algebra(s, char).center_dim()


def test_t_max_is_enforced():
    with pytest.raises(OracleResourceError):
        bar_hh_dim(dual_numbers(0), 5, t_max=3)


def test_cochain_limit_is_enforced():
    with pytest.raises(OracleResourceError):
        BarComplex(e6_algebra(2, 0), 3, limit=10).hh_dim(2)


def test_chars_of_demo():
    for char in CHARS:
        assert bar_hh_dim(dual_numbers(char), 0) == 2
