"""Degree classification and the closed dimension formulas.

Every degree is written ``t = 11 l + r`` with ``m = r // 2``; most formulas
depend on the residue of ``c = l (n + s) + m`` modulo ``2s``.  Parity
clauses of the form "l even or char 2" are read inclusively.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .quiver import N_RANK, period, sigma_order_formula

# residue keys: "0", "1", "s", "s+1"


def _residue(key: str, s: int) -> int:
    return {"0": 0, "1": 1, "s": s, "s+1": s + 1}[key] % (2 * s)


def congruence(s: int, t: int) -> int:
    ell, r = divmod(t, 11)
    return (ell * (N_RANK + s) + r // 2) % (2 * s)


def _clause(clause: str, ell: int, char: int) -> bool:
    """Parity/characteristic clause."""
    even = ell % 2 == 0
    table = {
        "": True,
        "even|c2": even or char == 2,
        "odd|c2": (not even) or char == 2,
        "even,c3": even and char == 3,
        "odd,c3": (not even) and char == 3,
        "even,!c2": even and char != 2,
        "odd,!c2": (not even) and char != 2,
        "even|!c3": even or char != 3,
        "odd|!c3": (not even) or char != 3,
        "c2": char == 2,
        "!c2": char != 2,
        "c3": char == 3,
        "!c3": char != 3,
    }
    return table[clause]


# The degree conditions indexing the generator families: (r values, residue key, clause).
CONDITIONS: dict[int, tuple[tuple[int, ...], str, str]] = {
    1: ((0,), "0", "even|c2"),
    2: ((0,), "s+1", "even,c3"),
    3: ((1,), "0", "even|c2"),
    4: ((1,), "s", "odd|c2"),
    5: ((2,), "s+1", "odd|c2"),
    6: ((3,), "0", ""),
    7: ((3,), "s", "c2"),
    8: ((4,), "s+1", "c2"),
    9: ((4,), "s", "odd,c3"),
    10: ((4,), "1", ""),
    11: ((5,), "0", "even,c3"),
    12: ((5,), "s", "odd,c3"),
    13: ((6,), "0", "c2"),
    14: ((6,), "1", "even,c3"),
    15: ((6,), "s", ""),
    16: ((7,), "0", "c2"),
    17: ((7,), "s", ""),
    18: ((8,), "0", "even|c2"),
    19: ((9,), "0", "even|c2"),
    20: ((9,), "s", "odd|c2"),
    21: ((10,), "s+1", "odd|c2"),
    22: ((10,), "0", "odd,c3"),
}


@dataclass(frozen=True)
class DegreeClass:
    t: int
    ell: int
    r: int
    m: int
    matched: tuple[int, ...]


def condition_holds(i: int, s: int, char: int, t: int) -> bool:
    rs, key, clause = CONDITIONS[i]
    ell, r = divmod(t, 11)
    return r in rs and congruence(s, t) == _residue(key, s) and _clause(clause, ell, char)


def classify_degree(s: int, char: int, t: int) -> DegreeClass:
    ell, r = divmod(t, 11)
    matched = tuple(i for i in CONDITIONS if condition_holds(i, s, char, t))
    return DegreeClass(t, ell, r, r // 2, matched)


@dataclass(frozen=True)
class PeriodData:
    m0: int
    period: int
    order: int


def period_data(s: int, char: int) -> PeriodData:
    m0 = 2 * s // gcd(N_RANK + s, 2 * s)
    return PeriodData(m0, period(s, char), sigma_order_formula(s, char))


# ---------------------------------------------------------------------------
# Hom dimensions

_HOM: dict[int, list[tuple[str, int]]] = {
    # r -> [(residue key, multiple of s)]; for s > 1 the keys are distinct
    0: [("0", 6), ("1", 6), ("s", 2), ("s+1", 2)],
    1: [("0", 7), ("s", 5)],
    2: [("0", 3), ("s+1", 3), ("s", 1), ("1", 1)],
    4: [("0", 2), ("s", 6), ("1", 5), ("s+1", 7)],
    6: [("0", 7), ("s", 5), ("1", 6), ("s+1", 2)],
    8: [("0", 3), ("s+1", 3), ("s", 1), ("1", 1)],
    9: [("0", 5), ("s", 7)],
    10: [("0", 2), ("1", 2), ("s", 6), ("s+1", 6)],
}

_HOM_S1: dict[int, tuple[int, int]] = {
    # r -> (l even, l odd)
    1: (7, 5), 2: (2, 6), 4: (9, 11), 6: (11, 9), 8: (6, 2), 9: (5, 7),
}


def expected_hom(s: int, t: int) -> int:
    ell, r = divmod(t, 11)
    m = r // 2
    if s == 1:
        if r in (0, 3, 5, 7, 10):
            return 8
        even, odd = _HOM_S1[r]
        return even if ell % 2 == 0 else odd
    if r in (3, 5, 7):
        return 8 * s if (ell * N_RANK + m) % s == 0 else 0
    c = congruence(s, t)
    for key, mult in _HOM[r]:
        if c == _residue(key, s):
            return mult * s
    return 0


# ---------------------------------------------------------------------------
# coboundary dimensions: r -> [(residue key, clause, multiple of s, correction)]

_IM: dict[int, list[tuple[str, str, int, int]]] = {
    0: [("0", "even|c2", 6, -1), ("0", "odd,!c2", 6, 0), ("s", "", 2, 0)],
    1: [("0", "", 1, 0), ("s", "odd|c2", 3, -1), ("s", "even,!c2", 3, 0)],
    2: [("0", "", 3, 0), ("s", "", 1, 0)],
    3: [("0", "", 5, -1), ("s", "c2", 7, -1), ("s", "!c2", 7, 0)],
    4: [("0", "", 2, 0), ("s", "odd,c3", 6, -1), ("s", "even|!c3", 6, 0)],
    5: [("0", "even,c3", 6, -1), ("0", "odd|!c3", 6, 0), ("s", "", 2, 0)],
    6: [("0", "c2", 7, -1), ("0", "!c2", 7, 0), ("s", "", 5, -1)],
    7: [("0", "", 1, 0), ("s", "", 3, 0)],
    8: [("0", "even|c2", 3, -1), ("0", "odd,!c2", 3, 0), ("s", "", 1, 0)],
    9: [("0", "", 2, 0), ("s", "odd|c2", 6, -1), ("s", "even,!c2", 6, 0)],
    10: [("0", "odd,c3", 2, -1), ("0", "even|!c3", 2, 0), ("s", "", 6, 0)],
}


def expected_im(s: int, char: int, t: int) -> int:
    """Dimension of the image of ``delta^t``; zero for ``t < 0``."""
    if t < 0:
        return 0
    ell, r = divmod(t, 11)
    c = congruence(s, t)
    for key, clause, mult, corr in _IM[r]:
        if c == _residue(key, s) and _clause(clause, ell, char):
            return mult * s + corr
    return 0


# ---------------------------------------------------------------------------
# HH dimensions

# s > 1: (r values, residue key, clause); HH^t is one-dimensional exactly when one holds
_HH_ONE: list[tuple[tuple[int, ...], str, str]] = [
    ((0, 1, 8, 9), "0", "even|c2"),
    ((0,), "s+1", "even,c3"),
    ((1, 9), "s", "odd|c2"),
    ((2, 10), "s+1", "odd|c2"),
    ((3,), "0", ""),
    ((3,), "s", "c2"),
    ((4, 5), "s", "odd,c3"),
    ((4,), "1", ""),
    ((4,), "s+1", "c2"),
    ((5,), "0", "even,c3"),
    ((6, 7), "0", "c2"),
    ((6, 7), "s", ""),
    ((6,), "1", "even,c3"),
    ((10,), "0", "odd,c3"),
]


def _hh_s1(char: int, t: int) -> int:
    ell, r = divmod(t, 11)
    m = r // 2
    even = (ell + m) % 2 == 0
    if t == 0:
        return 3
    if char == 3 and ((r in (0, 10) and even) or (r in (4, 6) and not even)):
        return 2
    one = (
        (r in (0, 10) and even and char != 3)
        or r in (1, 9)
        or (r in (2, 8) and even)
        or (r == 3 and (even or char == 2))
        or (r in (4, 6) and even and char == 2)
        or (r in (4, 6) and not even and char != 3)
        or (r == 5 and char == 3)
        or (r == 7 and (not even or char == 2))
    )
    return 1 if one else 0


def expected_hh(s: int, char: int, t: int) -> int:
    if s == 1:
        return _hh_s1(char, t)
    ell, r = divmod(t, 11)
    c = congruence(s, t)
    for rs, key, clause in _HH_ONE:
        if r in rs and c == _residue(key, s) and _clause(clause, ell, char):
            return 1
    return 0


@dataclass(frozen=True)
class ExpectedDims:
    hom: int
    im: int  # dim Im delta^t
    im_prev: int  # dim Im delta^{t-1}
    hh: int

    @property
    def hh_from_ranks(self) -> int:
        return self.hom - self.im - self.im_prev


def expected_dims(s: int, char: int, t: int) -> ExpectedDims:
    return ExpectedDims(expected_hom(s, t), expected_im(s, char, t), expected_im(s, char, t - 1),
                        expected_hh(s, char, t))


@dataclass(frozen=True)
class DimRow:
    t: int
    hom: int
    im: int
    hh: int
    expected: ExpectedDims

    @property
    def ok(self) -> bool:
        e = self.expected
        return (self.hom, self.im, self.hh) == (e.hom, e.im, e.hh) and e.hh == e.hh_from_ranks


def computed_dims(res, t: int) -> tuple[int, int, int]:
    """``(dim Hom(Q_t, A), dim Im delta^t, dim HH^t)`` from a resolution."""
    here = res.cohomology(t)
    return here.cochain_dim, res.cohomology(t + 1).image_dim, here.dim


def compare_dims(res, degrees) -> list[DimRow]:
    rows = []
    for t in degrees:
        hom, im, hh = computed_dims(res, t)
        rows.append(DimRow(t, hom, im, hh, expected_dims(res.s, res.char, t)))
    return rows
