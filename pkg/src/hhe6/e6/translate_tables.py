"""Entry tables of the translates of the generators in families 1-5, 23, 24.

Each builder returns ``{column: [Entry, ...]}`` for the map
``Q_{t+r0} -> Q_{r0}`` in the same label form as the differential tables.
``ka(i)`` and ``kg(i)`` are the signs ``kappa^ell`` of the arrows ``alpha_i``
and ``gamma_i``; ``m`` is the index shift ``r0 // 2``.  The builders are
machine-generated from the LaTeX form of the tables and are not meant to be
edited by hand.
"""

from __future__ import annotations

from .tables import E, Entry, W, f, f1, f2


def md(x: int, n: int) -> int:
    return x % n


def _put(out: dict, col: int, row: int, coef: int, left, right) -> None:
    out.setdefault(col, []).append(Entry(row, coef, left, right))


def _c1_0(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * j), E(4 * j))
    for j in range(s, 3 * s):
        _put(out, j, j, 1, E(4 * (j + s) + 1), E(4 * (j + s) + 1))
    for j in range(3 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + s) + 2), E(4 * (j + s) + 2))
    for j in range(5 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * j + 3), E(4 * j + 3))
    return out


def _c1_1(s, m, ka, kg):
    out: dict = {}
    for j in range(0, 2 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * j))
    for j in range(2 * s, 4 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 2), E(4 * j + 1))
    for j in range(4 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) + 3), E(4 * j + 2))
    for j in range(6 * s, 7 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 3))
    return out


def _c1_2(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) - 1), E(4 * j))
    for j in range(s, 3 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 2), E(4 * (j + s) + 1))
    for j in range(3 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * (j + s) + 2))
    for j in range(5 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 3))
    return out


def _c1_3(s, m, ka, kg):
    out: dict = {}
    for j in range(0, 2 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 2), E(4 * j))
    for j in range(2 * s, 4 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) + 3), E(4 * j + 1))
    for j in range(4 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 2))
    for j in range(6 * s, 8 * s):
        _put(out, j, j, 1, E(4 * (j + m + 1) + 1), E(4 * j + 3))
    return out


def _c1_4(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) - 1), E(4 * j))
    for j in range(s, 2 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m)), E(4 * j))
    for j in range(2 * s, 4 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 1), E(4 * j + 1))
    for j in range(4 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * j + 2))
    for j in range(5 * s, 6 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 2), E(4 * (j + s) + 2))
    for j in range(6 * s, 7 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 1), E(4 * (j + s) + 2))
    for j in range(7 * s, 8 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 2), E(4 * j + 2))
    for j in range(8 * s, 9 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1) - 1), E(4 * j + 3))
    return out


def _c1_5(s, m, ka, kg):
    out: dict = {}
    for j in range(0, 2 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * j))
    for j in range(2 * s, 4 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 1))
    for j in range(4 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + s) + 3), E(4 * j + 2))
    for j in range(6 * s, 8 * s):
        _put(out, j, j, 1, E(4 * (j + m + 1) + 2), E(4 * j + 3))
    return out


def _c1_6(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m)), E(4 * j))
    for j in range(s, 2 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 1), E(4 * (j + s) + 1))
    for j in range(2 * s, 3 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 2), E(4 * j + 1))
    for j in range(3 * s, 4 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * j + 1))
    for j in range(4 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 2), E(4 * (j + s) + 1))
    for j in range(5 * s, 7 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 2), E(4 * (j + s) + 2))
    for j in range(7 * s, 8 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1) - 1), E(4 * j + 3))
    for j in range(8 * s, 9 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 3))
    return out


def _c1_7(s, m, ka, kg):
    out: dict = {}
    for j in range(0, 2 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 2), E(4 * j))
    for j in range(2 * s, 4 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) + 3), E(4 * j + 1))
    for j in range(4 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 2))
    for j in range(6 * s, 8 * s):
        _put(out, j, j, 1, E(4 * (j + m + 1) + 1), E(4 * j + 3))
    return out


def _c1_8(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) - 1), E(4 * j))
    for j in range(s, 3 * s):
        _put(out, j, j, 1, E(4 * (j + m + s) + 2), E(4 * (j + s) + 1))
    for j in range(3 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * (j + s) + 2))
    for j in range(5 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * j + 3))
    return out


def _c1_9(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m) + 3), E(4 * j))
    for j in range(s, 3 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + 1)), E(4 * (j + s) + 1))
    for j in range(3 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + m + 1) + 1), E(4 * (j + s) + 2))
    for j in range(5 * s, 7 * s):
        _put(out, j, j, 1, E(4 * (j + m + 1 + s) + 2), E(4 * j + 3))
    return out


def _c1_10(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m)), E(4 * j))
    for j in range(s, 3 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 1), E(4 * (j + s) + 1))
    for j in range(3 * s, 5 * s):
        _put(out, j, j, 1, E(4 * (j + m) + 2), E(4 * (j + s) + 2))
    for j in range(5 * s, 6 * s):
        _put(out, j, j, ka(3 * (j + m)), E(4 * (j + m + s) + 3), E(4 * j + 3))
    return out


def _c2_0(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 0
    _put(out, j, 0, ka(0), W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    return out


def _c2_1(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 6 * s + md(5, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c2_2(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 5 * s + md(4, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c2_3(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 4 * s + md(4, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    j = 5 * s + md(4, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    return out


def _c2_4(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = s + md(4, s)
    _put(out, j, j, k0, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    return out


def _c2_5(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 2 * s + md(3, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 1))
    j = 3 * s + md(3, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 1))
    return out


def _c2_6(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = md(3, s)
    _put(out, j, j, k0, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    j = 8 * s + md(2, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c2_7(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 4 * s + md(2, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    j = 5 * s + md(2, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    return out


def _c2_8(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = 5 * s + md(1, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c2_9(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = s + md(1, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * (j + s) + 1))
    j = 2 * s + md(1, s)
    _put(out, j, j, k0, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * (j + s) + 1))
    return out


def _c2_10(s, m, ka, kg):
    out: dict = {}
    k0 = f2(s, 1) * ka(0)
    j = md(1, s)
    _put(out, j, j, k0, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    return out


def _c3_0(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, 0, 1, W(4 * j, 4 * j + 1), E(4 * j))
    j = s
    _put(out, j, 0, 1, W(4 * j, 4 * j + 1), E(4 * j))
    return out


def _c3_1(s, m, ka, kg):
    out: dict = {}
    j = s + md(1, s)
    _put(out, j, md(s + j + 1, 2 * s), 1,
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = s + md(1, s)
    _put(out, j, 2 * s + md(s + j + 1, 2 * s), 1,
         E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + s + 1) + 1))
    j = 2 * s + md(1, s)
    _put(out, j, md(s + j + 1, 2 * s), 1,
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 2 * s + md(1, s)
    _put(out, j, 2 * s + md(s + j + 1, 2 * s), 1,
         E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + s + 1) + 1))
    j = 3 * s + md(1, s)
    _put(out, j, md(j + 1, 2 * s), 1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + 1)))
    j = 4 * s + md(1, s)
    _put(out, j, md(j + 1, 2 * s), 1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + 1)))
    j = 5 * s + md(1, s)
    _put(out, j, j + s, -(ka(3 * (j + m))), W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c3_2(s, m, ka, kg):
    out: dict = {}
    j = 2 * s + md(1, s)
    _put(out, j, md(j + 1, s), f1(md(j, s), s - 1) * ka(3 * (j + m)),
         E(4 * (j + m) + 3), W(4 * j + 1, 4 * (j + 1)))
    j = 3 * s + md(1, s)
    _put(out, j, md(j + 1, s), -(f1(md(j, s), s - 1) * ka(3 * (j + m))),
         E(4 * (j + m) + 3), W(4 * j + 1, 4 * (j + 1)))
    j = 4 * s + md(1, s)
    _put(out, j, j - s, ka(3 * (j + m)), W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j + 2))
    j = 5 * s + md(1, s)
    _put(out, j, j - s, ka(3 * (j + m)), W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j + 2))
    return out


def _c3_3(s, m, ka, kg):
    out: dict = {}
    j = s + md(1, s)
    _put(out, j, j - s, -(ka(3 * (j + m))), W(4 * (j + m + s) + 2, 4 * (j + m + 1)), E(4 * j))
    j = s + md(1, s)
    _put(out, j, j + s, -(ka(3 * (j + m))), W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * (j + s) + 1))
    j = 2 * s + md(1, s)
    _put(out, j, j, -1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), E(4 * j + 1))
    j = 3 * s + md(1, s)
    _put(out, j, j, -1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), E(4 * j + 1))
    return out


def _c3_4(s, m, ka, kg):
    out: dict = {}
    j = md(1, s)
    _put(out, j, j, 1, W(4 * (j + m - 1) + 3, 4 * (j + m) + 1), E(4 * j))
    j = 2 * s
    _put(out, j, s + md(j + 1, s), f1(md(j, s), s - 1) * ka(3 * (j + m)),
         E(4 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1)))
    j = 3 * s
    _put(out, j, s + md(j + 1, s), -(f1(md(j, s), s - 1) * ka(3 * (j + m))),
         E(4 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1)))
    j = 6 * s
    _put(out, j, 2 * s + md(s + j + 1, 2 * s), -1,
         W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 1))
    j = 6 * s
    _put(out, j, 6 * s + md(s + j + 1, 2 * s) - f(s, 1) * s, 1,
         E(4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 2))
    j = 7 * s
    _put(out, j, 2 * s + md(s + j + 1, 2 * s), 1,
         W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 1))
    j = 7 * s
    _put(out, j, 5 * s + md(s + j + 1, 2 * s) + f(s, 1) * s, -1,
         E(4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 2))
    return out


def _c3_5(s, m, ka, kg):
    out: dict = {}
    j = s
    _put(out, j, md(s + j + 1, 2 * s), -1, E(4 * (j + m + s + 1) + 1), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 2 * s
    _put(out, j, md(s + j + 1, 2 * s), 1,
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * j + 1, 4 * (j + 1)))
    j = 3 * s
    _put(out, j, md(j + 1, 2 * s), -1, E(4 * (j + m + 1) + 1), W(4 * j + 1, 4 * (j + 1)))
    j = 4 * s
    _put(out, j, md(j + 1, 2 * s), 1,
         W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 7 * s
    _put(out, j, md(s + j + 1, 2 * s), ka(3 * (j + m)),
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1)))
    j = 7 * s
    _put(out, j, md(j + 1, 2 * s), ka(3 * (j + m)),
         W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1)))
    j = 7 * s
    _put(out, j, 4 * s + md(s + j + 1, 2 * s), -(ka(3 * (j + m))),
         E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + s + 1) + 2))
    j = 7 * s
    _put(out, j, 4 * s + md(j + 1, 2 * s), -(ka(3 * (j + m))),
         E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 2))
    j = 8 * s
    _put(out, j, 2 * s + md(s + j + 1, 2 * s), -(ka(3 * (j + m))),
         E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1) + 1))
    return out


def _c3_6(s, m, ka, kg):
    out: dict = {}
    j = 5 * s
    _put(out, j, md(j + 1, s), -(ka(3 * (j + m))), E(4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1)))
    j = 6 * s
    _put(out, j, md(j + 1, s), 1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1)))
    j = 6 * s
    _put(out, j, s + md(j + 1, 2 * s) + f(s, 1) * s, -1,
         E(4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1) + 1))
    j = 7 * s
    _put(out, j, 2 * s + md(j + 1, 2 * s) - f(s, 1) * s, -1,
         E(4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1) + 1))
    return out


def _c3_7(s, m, ka, kg):
    out: dict = {}
    j = s
    _put(out, j, md(j + s + 1, 2 * s), -1, E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 2 * s
    _put(out, j, md(j + s + 1, 2 * s), -1, E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 5 * s
    _put(out, j, s + md(j + 1, s), ka(3 * (j + m)),
         W(4 * (j + m + 1 + f(s, 1) * s) + 2, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1)))
    j = 5 * s
    _put(out, j, 2 * s + md(j + 1, s), -(ka(3 * (j + m))),
         W(4 * (j + m + 1) + 3, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1 + f(s, 1) * s) + 1))
    j = 5 * s
    _put(out, j, 4 * s + md(j + s + 1, 2 * s), -(ka(3 * (j + m))),
         E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1) + 2))
    j = 5 * s
    _put(out, j, 4 * s + md(j + 1, 2 * s), -(ka(3 * (j + m))),
         E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1) + 2))
    return out


def _c3_8(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, md(j + 1, s), f1(md(j, s), s - 1) * ka(3 * (j + m)),
         E(4 * (j + m) + 3), W(4 * j, 4 * (j + 1)))
    j = s + f(s, 1) * s
    _put(out, j, md(j + 1, s), -(ka(3 * (j + m))),
         W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 3 * s
    _put(out, j, 3 * s + md(j + s + 1, 2 * s), 1,
         E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + s + 1) + 2))
    j = 3 * s + f(s, 1) * s
    _put(out, j, md(j + 1, s), 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + 1)))
    j = 4 * s
    _put(out, j, 3 * s + md(j + s + 1, 2 * s), 1,
         E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + s + 1) + 2))
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), E(4 * j + 3))
    j = 6 * s
    _put(out, j, j - s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), E(4 * j + 3))
    return out


def _c3_9(s, m, ka, kg):
    out: dict = {}
    j = 3 * s
    _put(out, j, j, -1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), E(4 * (j + s) + 2))
    j = 4 * s
    _put(out, j, j, -1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), E(4 * (j + s) + 2))
    return out


def _c3_10(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, md(j + 1, s), f1(md(j, s), s - 1) * ka(3 * (j + m)),
         E(4 * (j + m + 1)), W(4 * j, 4 * (j + 1)))
    j = 0
    _put(out, j, j + 3 * s, -(ka(3 * (j + m))), W(4 * (j + m + s) + 2, 4 * (j + m + 1)), W(4 * j, 4 * j + 2))
    j = 0
    _put(out, j, j + 4 * s, ka(3 * (j + m)), W(4 * (j + m) + 2, 4 * (j + m + 1)), W(4 * j, 4 * (j + s) + 2))
    j = 0
    _put(out, j, j + 5 * s, -(ka(3 * (j + m))), W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * j + 3))
    j = s
    _put(out, j, j, 1, W(4 * (j + m) + 1, 4 * (j + m + 1) + 1), E(4 * (j + s) + 1))
    j = 2 * s
    _put(out, j, j, 1, W(4 * (j + m) + 1, 4 * (j + m + 1) + 1), E(4 * (j + s) + 1))
    j = 3 * s + md(s - 1, s)
    _put(out, j, 3 * s + md(j + s + 1, 2 * s), 1,
         E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * (j + s + 1) + 2))
    j = 4 * s + md(s - 1, s)
    _put(out, j, 3 * s + md(j + s + 1, 2 * s), 1,
         E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * (j + s + 1) + 2))
    j = 5 * s + md(s - 1, s)
    _put(out, j, 3 * s + md(j + 1, 2 * s), -(ka(3 * (j + m))),
         W(4 * (j + m + s + 1) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 2))
    j = 5 * s + md(s - 1, s)
    _put(out, j, 3 * s + md(j + s + 1, 2 * s), ka(3 * (j + m)),
         W(4 * (j + m + 1) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + s + 1) + 2))
    j = 5 * s + md(s - 1, s)
    _put(out, j, 5 * s + md(j + 1, s), f1(md(j, s), s - 1) * ka(3 * (j + m)),
         E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 3))
    return out


def _c4_0(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, md(j, s), 1, W(4 * (j + m), 4 * (j + m + s) + 1), E(4 * j))
    for j in range(5 * s - 1, 6 * s - 1):
        _put(out, j, j - s, -(ka(3 * (j + m))), W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j + 2))
    return out


def _c4_1(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        k1 = ka(3 * (j + m))
        _put(out, j, j, k1, W(4 * (j + m) + 1, 4 * (j + m) + 3), E(4 * j))
        _put(out, j, j + 2 * s, k1, W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j, 4 * j + 1))
        if j < s - 1:
            _put(out, j, j + 4 * s, k1, E(4 * (j + m) + 3), W(4 * j, 4 * j + 2))
        if j < s - 1:
            _put(out, j, j + 5 * s, -k1, E(4 * (j + m) + 3), W(4 * j, 4 * (j + s) + 2))
    for j in range(s, 2 * s - 1):
        _put(out, j, s + md(j + 1, s), -1,
             W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    for j in range(3 * s - 1, 3 * s):
        _put(out, j, s + md(j + 1, s), -1,
             W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    for j in range(4 * s - 1, 4 * s):
        _put(out, j, j + s, -1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), E(4 * (j + s) + 2))
        _put(out, j, j + 3 * s, -1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(4 * s, 5 * s - 1):
        _put(out, j, j + s, -1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), E(4 * (j + s) + 2))
        _put(out, j, j + 2 * s, -1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(5 * s, 6 * s):
        k1 = ka(3 * (j + m + 2))
        _put(out, j, j + s, f2(j, 6 * s - 1) * k1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
        if j == 5 * s + md(s - 2, s):
            _put(out, j, 4 * s + md(j + 1, s), f2(s, 1) * k1,
                 W(4 * (j + m + 1) + 3, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1 + s * f(s, 1)) + 2))
        if j == 5 * s + md(s - 2, s):
            _put(out, j, 6 * s + md(j + 1, s), f2(s, 1) * k1,
                 E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1) + 3))
    return out


def _c4_2(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s - 1):
        _put(out, j, j + 3 * s, 1, W(4 * (j + m + s) + 1, 4 * (j + m + s) + 2), W(4 * j, 4 * j + 2))
    for j in range(s, 2 * s - 1):
        _put(out, j, j - s, -1, W(4 * (j + m + s) - 1, 4 * (j + m + s) + 2), E(4 * j))
    for j in range(2 * s - 1, 2 * s):
        _put(out, j, j, -1, E(4 * (j + m + s) + 2), W(4 * j, 4 * (j + s) + 1))
    for j in range(2 * s, 3 * s):
        _put(out, j, md(j + 1, s), -(ka(3 * (j + m))), E(4 * (j + m) + 3), W(4 * j + 1, 4 * (j + 1)))
        if j == 3 * s - 1:
            _put(out, j, j - s, -(ka(3 * (j + m))), W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j + 1))
    for j in range(3 * s, 4 * s):
        _put(out, j, md(j + 1, s), -(ka(3 * (j + m))), E(4 * (j + m) + 3), W(4 * j + 1, 4 * (j + 1)))
        if j < 4 * s - 1:
            _put(out, j, j - s, -(ka(3 * (j + m))), W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j + 1))
    for j in range(4 * s, 5 * s - 1):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, md(j + 1, s), -k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1)))
        _put(out, j, j - s, -k1, W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j + 2))
    for j in range(6 * s - 1, 6 * s):
        k1 = -ka(3 * (j + m + 1))
        _put(out, j, md(j + 1, s), k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1)))
        _put(out, j, j - s, k1, W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j + 2))
    for j in range(6 * s, 7 * s - 1):
        _put(out, j, 3 * s + md(j + 1, s), 1, E(4 * (j + m + s + 1) + 1), W(4 * j + 3, 4 * (j + 1) + 2))
    for j in range(8 * s - 1, 8 * s):
        _put(out, j, 3 * s + md(j + 1, s), 1, E(4 * (j + m + s + 1) + 1), W(4 * j + 3, 4 * (j + 1) + 2))
    return out


def _c4_3(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s - 1):
        _put(out, j, j, ka(3 * (j + m)), W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j))
        _put(out, j, j + 2 * s, ka(3 * (j + m)), E(4 * (j + m) + 3), W(4 * j, 4 * j + 1))
        _put(out, j, j + 3 * s, ka(3 * (j + m)), E(4 * (j + m) + 3), W(4 * j, 4 * (j + s) + 1))
    for j in range(2 * s - 1, 2 * s):
        _put(out, j, j - s, ka(3 * (j + m + 1)), W(4 * (j + m + s) + 2, 4 * (j + m + 1)), E(4 * j))
    for j in range(3 * s - 1, 3 * s):
        _put(out, j, j, -1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), E(4 * j + 1))
    for j in range(3 * s, 4 * s - 1):
        _put(out, j, j, -1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), E(4 * j + 1))
    for j in range(4 * s, 5 * s - 1):
        _put(out, j, j, -1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), E(4 * j + 2))
        _put(out, j, j + 3 * s, -1, E(4 * (j + m + s + 1) + 1), W(4 * j + 2, 4 * j + 3))
    for j in range(7, 8):
        if s == 1:
            _put(out, j, md(j + 1, s), -1, E(4 * (j + m + 1) + 2), W(4 * j + 2, 4 * (j + 1)))
    for j in range(6 * s - 2, 6 * s - 1):
        if s > 1:
            _put(out, j, md(j + 1, s), -1, E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * (j + 1)))
    for j in range(7 * s - 1, 7 * s):
        _put(out, j, j - s, -1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), E(4 * (j + s) + 2))
        _put(out, j, j, -1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(8 * s + md(s - 2, s), 8 * s + md(s - 2, s) + 1):
        _put(out, j, 2 * s + md(j + 1, s), ka(3 * (j + m)),
             E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1 + s * f(s, 1)) + 1))
    return out


def _c4_4(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s - 1):
        _put(out, j, j + 2 * s, -1, E(4 * (j + m + s) + 1), W(4 * j, 4 * j + 1))
    for j in range(2 * s - 1, 2 * s):
        _put(out, j, j - s, 1, W(4 * (j + m + s) - 1, 4 * (j + m + s) + 1), E(4 * j))
        _put(out, j, j + 2 * s, -1, E(4 * (j + m + s) + 1), W(4 * j, 4 * j + 1))
    for j in range(2 * s, 3 * s - md(2, s)):
        _put(out, j, s + md(j + 1, s), f2(s, 1) * ka(3 * (j + m + 1)),
             E(4 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1)))
    for j in range(4 * s - md(2, s), 4 * s):
        _put(out, j, s + md(j + 1, s), f2(j, 4 * s - 2) * ka(3 * (j + m + 1)),
             E(4 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1)))
    for j in range(4 * s, 5 * s - 1):
        _put(out, j, md(j + 1, s), ka(3 * (j + m)), E(4 * (j + m) + 3), W(4 * j + 2, 4 * (j + 1)))
        _put(out, j, j + s, -(ka(3 * (j + m))), W(4 * (j + m + s) + 2, 4 * (j + m) + 3), E(4 * j + 2))
    for j in range(6 * s - 1, 6 * s):
        _put(out, j, md(j + 1, s), ka(3 * (j + m)), E(4 * (j + m) + 3), W(4 * j + 2, 4 * (j + 1)))
        _put(out, j, j + 2 * s, -(ka(3 * (j + m))), W(4 * (j + m + s) + 2, 4 * (j + m) + 3), E(4 * j + 2))
    for j in range(6 * s, 7 * s - 1):
        _put(out, j, 2 * s + md(j + 1, s), -1,
             W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 1))
        _put(out, j, 5 * s + md(j + 1, s), 1, E(4 * (j + m + s + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 2))
    for j in range(8 * s - 1, 8 * s):
        _put(out, j, 2 * s + md(j + 1, s), 1,
             W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 1))
        _put(out, j, 5 * s + md(j + 1, s), -1, E(4 * (j + m + s + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 2))
    return out


def _c4_5_s1(s, m, ka, kg):
    out: dict = {}
    j = 0
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j + 3 * s, -(ka(3 * (j + m + 1))), E(4 * (j + m)), W(4 * j, 4 * (j + 1) + 1))
    j = s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - s, -1, E(4 * (j + m + 1) + 1), W(4 * (j + 1) + 1, 4 * j))
    j = 2 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 1, 4 * j))
    j = 6 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), E(4 * (j + 1) + 2))
    j = 6 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j, -1, E(4 * (j + m + 1) + 2), W(4 * (j + 1) + 2, 4 * j + 3))
    j = 7 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - 7 * s, k1, W(4 * (j + m + 1) + 1, 4 * (j + m) + 3), W(4 * j + 3, 4 * j))
    j = 7 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - 6 * s, k1, W(4 * (j + m) + 1, 4 * (j + m) + 3), W(4 * j + 3, 4 * j))
    j = 7 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - 3 * s, -k1, E(4 * (j + m) + 3), W(4 * j + 3, 4 * (j + 1) + 2))
    j = 7 * s
    k1 = -ka(3 * (7 * s + m + 1))
    _put(out, j, j - 2 * s, -k1, E(4 * (j + m) + 3), W(4 * j + 3, 4 * j + 2))
    return out


def _c4_5_sg(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, j + 2 * s, k1, E(4 * (j + m + 1)), W(4 * j, 4 * j + 1))
        if j == s - 1:
            _put(out, j, j, k1, W(4 * (j + m) + 1, 4 * (j + m + 1)), E(4 * j))
        if j == s - 1:
            _put(out, j, j + s, k1, W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j))
        if j == s - 1:
            _put(out, j, j + 4 * s, -k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * j + 2))
        if j == s - 1:
            _put(out, j, j + 5 * s, -k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * (j + s) + 2))
    for j in range(s, 2 * s - 2):
        _put(out, j, s + md(j + 1, s), -1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 1, 4 * (j + 1)))
    for j in range(2 * s, 3 * s - 2):
        _put(out, j, md(j + 1, s), 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 1, 4 * (j + 1)))
    for j in range(4 * s - 2, 4 * s - 1):
        _put(out, j, md(j + 1, s), -1, E(4 * (j + m + s + 1) + 1), W(4 * j + 1, 4 * (j + 1)))
    for j in range(4 * s - 1, 4 * s):
        _put(out, j, s + md(j + 1, s), -1, E(4 * (j + m + s + 1) + 1), W(4 * j + 1, 4 * (j + 1)))
    for j in range(5 * s - 1, 5 * s):
        _put(out, j, md(j + 1, s), 1,
             W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    for j in range(5 * s - 2, 5 * s - 1):
        _put(out, j, s + md(j + 1, s), 1,
             W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    for j in range(5 * s, 6 * s - 1):
        _put(out, j, j - s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), E(4 * (j + s) + 2))
        _put(out, j, j + 2 * s, 1, E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(7 * s - 1, 7 * s):
        _put(out, j, j - s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), E(4 * (j + s) + 2))
        _put(out, j, j, -1, E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(8 * s - 2, 8 * s - 1):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, md(j + 1, s), k1,
             W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1)))
        _put(out, j, s + md(j + 1, s), k1,
             W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1)))
        _put(out, j, 4 * s + md(j + 1, s), -k1, E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + s + 1) + 2))
        _put(out, j, 5 * s + md(j + 1, s), -k1, E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 2))
    for j in range(8 * s, 9 * s - 1):
        _put(out, j, 2 * s + md(j + 1, s), -(ka(3 * (j + m + 2))),
             E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1) + 1))
    return out


def _c4_6_s1(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j + 3 * s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j, 4 * (j + 1) + 1))
    j = s
    _put(out, j, j + 3 * s, -1, E(4 * (j + m + 1) + 2), W(4 * j, 4 * j + 1))
    j = 3 * s
    _put(out, j, j, ka(3 * (j + m)), W(4 * (j + m) + 1, 4 * (j + m) + 3), E(4 * j + 1))
    j = 3 * s
    _put(out, j, j + s, -(ka(3 * (j + m))), W(4 * (j + m + 1) + 2, 4 * (j + m) + 3), E(4 * j + 1))
    j = 5 * s
    _put(out, j, j + s, -(ka(3 * (j + m))), W(4 * (j + m) + 2, 4 * (j + m)), E(4 * j + 2))
    j = 5 * s
    _put(out, j, j + 2 * s, ka(3 * (j + m)), W(4 * (j + m) + 3, 4 * (j + m)), W(4 * j + 2, 4 * j + 3))
    j = 6 * s
    _put(out, j, j - 6 * s, -1, W(4 * (j + m), 4 * (j + m) + 1), W(4 * j + 3, 4 * j))
    j = 6 * s
    _put(out, j, j - 5 * s, 1, E(4 * (j + m) + 1), W(4 * j + 3, 4 * j + 1))
    return out


def _c4_6_sg(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j, -1, W(4 * (j + m), 4 * (j + m + s) + 2), E(4 * j))
        _put(out, j, j + 3 * s, 1, W(4 * (j + m + s) + 1, 4 * (j + m + s) + 2), W(4 * j, 4 * (j + s) + 1))
        if j < s - 1:
            _put(out, j, j + 6 * s, -1, E(4 * (j + m + s) + 2), W(4 * j, 4 * (j + s) + 2))
    for j in range(s, 2 * s):
        _put(out, j, j, 1, W(4 * (j + m + s) + 1, 4 * (j + m + s) + 2), W(4 * j, 4 * (j + s) + 1))
    for j in range(2 * s - 1, 2 * s):
        _put(out, j, j + 4 * s, -1, E(4 * (j + m + s) + 2), W(4 * j, 4 * (j + s) + 2))
    for j in range(2 * s, 3 * s - 1):
        _put(out, j, j + 3 * s, ka(3 * (j + m)), W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j + 1, 4 * j + 2))
        _put(out, j, j + 5 * s, -(ka(3 * (j + m))), E(4 * (j + m) + 3), W(4 * j + 1, 4 * j + 3))
    for j in range(4 * s - 1, 4 * s):
        _put(out, j, j + 3 * s, ka(3 * (j + m)), W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j + 1, 4 * j + 2))
        _put(out, j, j + 4 * s, -(ka(3 * (j + m))), E(4 * (j + m) + 3), W(4 * j + 1, 4 * j + 3))
    for j in range(4 * s, 5 * s - 1):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, md(j + 1, s), k1, E(4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1)))
        _put(out, j, j + s, k1, W(4 * (j + m) + 2, 4 * (j + m + 1)), E(4 * j + 2))
        _put(out, j, j + 3 * s, -k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 2, 4 * j + 3))
    for j in range(6 * s - 1, 6 * s):
        _put(out, j, md(j + 1, s), -(ka(3 * (j + m))), E(4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1)))
        _put(out, j, j + s, -(ka(3 * (j + m))), W(4 * (j + m) + 2, 4 * (j + m + 1)), E(4 * j + 2))
        _put(out, j, j + 2 * s, ka(3 * (j + m)), W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 2, 4 * j + 3))
    for j in range(7 * s - 1, 7 * s):
        _put(out, j, s + md(j + 1, s), 1, E(4 * (j + m + s + 1) + 1), W(4 * j + 3, 4 * (j + s + 1) + 1))
    for j in range(7 * s, 8 * s - 1):
        _put(out, j, s + md(j + 1, s), 1, E(4 * (j + m + s + 1) + 1), W(4 * j + 3, 4 * (j + s + 1) + 1))
    return out


def _c4_7_s1(s, m, ka, kg):
    out: dict = {}
    j = s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j - s, -1, E(4 * (j + m + 1) + 2), W(4 * (j + 1) + 1, 4 * j))
    j = 2 * s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j + s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), E(4 * (j + 1) + 1))
    j = 4 * s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j + s, -1, W(4 * (j + m), 4 * (j + m) + 1), E(4 * (j + 1) + 2))
    j = 4 * s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j + 3 * s, 1, E(4 * (j + m) + 1), W(4 * (j + 1) + 2, 4 * j + 3))
    j = 5 * s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j - 5 * s, k1, W(4 * (j + m + 1) + 2, 4 * (j + m)), W(4 * j + 3, 4 * j))
    j = 5 * s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j - s, -k1, E(4 * (j + m)), W(4 * j + 3, 4 * (j + 1) + 2))
    j = 5 * s
    k1 = -ka(3 * (5 * s + m))
    _put(out, j, j, -k1, E(4 * (j + m)), W(4 * j + 3, 4 * j + 2))
    return out


def _c4_7_sg(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, j + s, ka(3 * (j + m)), W(4 * (j + m + s) + 2, 4 * (j + m) + 3), E(4 * j))
        _put(out, j, j + 2 * s, -(ka(3 * (j + m))), E(4 * (j + m) + 3), W(4 * j, 4 * j + 1))
    for j in range(3 * s, 4 * s - 1):
        _put(out, j, j + s, -1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), E(4 * (j + s) + 2))
        _put(out, j, j + 3 * s, 1, E(4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(5 * s - 1, 5 * s):
        _put(out, j, j + s, -1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), E(4 * (j + s) + 2))
        _put(out, j, j + 3 * s, 1, E(4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(6 * s - 2, 6 * s - 1):
        k1 = ka(3 * (j + m + 2))
        _put(out, j, 4 * s + md(j + 1, s), k1, E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1) + 2))
        _put(out, j, 5 * s + md(j + 1, s), k1, E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1) + 2))
    return out


def _c4_8_s1(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j + 2 * s, ka(3 * (j + m)),
         W(4 * (j + m + 1) + 2, 4 * (j + m) + 3), W(4 * j, 4 * (j + 1) + 1))
    j = 2 * s
    _put(out, j, j, ka(3 * (j + m)), W(4 * (j + m + 1) + 2, 4 * (j + m)), E(4 * (j + 1) + 1))
    j = 4 * s
    _put(out, j, j - 4 * s, -1, W(4 * (j + m) + 3, 4 * (j + m) + 1), W(4 * (j + 1) + 2, 4 * j))
    j = 4 * s
    _put(out, j, j + s, -1, W(4 * (j + m), 4 * (j + m) + 1), W(4 * (j + 1) + 2, 4 * j + 3))
    j = 5 * s
    _put(out, j, j - 5 * s, -1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * j))
    j = 5 * s
    _put(out, j, j - 4 * s, 1, E(4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 1))
    j = 5 * s
    _put(out, j, j - s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * j + 2))
    j = 6 * s
    _put(out, j, j - 3 * s, -1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * j + 2))
    return out


def _c4_8_sg(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        _put(out, j, md(j + 1, s), ka(3 * (j + m)), E(4 * (j + m) + 3), W(4 * j, 4 * (j + 1)))
        if j < s - 1:
            _put(out, j, j + s, ka(3 * (j + m)), W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j, 4 * j + 1))
        if j == s - 1:
            _put(out, j, j, ka(3 * (j + m)), W(4 * (j + m - 1) + 3, 4 * (j + m) + 3), E(4 * j))
        if j == s - 1:
            _put(out, j, j + 2 * s, ka(3 * (j + m)),
                 W(4 * (j + m + s) + 2, 4 * (j + m) + 3), W(4 * j, 4 * (j + s) + 1))
    for j in range(s, 2 * s - 1):
        k1 = -ka(3 * (j + m + 1))
        _put(out, j, md(j + 1, s), k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + 1)))
        _put(out, j, j, k1, W(4 * (j + m + s) + 2, 4 * (j + m + 1)), E(4 * (j + s) + 1))
    for j in range(3 * s - 1, 3 * s):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, j + 2 * s, -k1, W(4 * (j + m) + 1, 4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + s) + 2))
        _put(out, j, j + 3 * s, k1, E(4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * j + 3))
    for j in range(3 * s, 4 * s - 1):
        _put(out, j, j + 2 * s, -1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(5 * s - 1, 5 * s):
        _put(out, j, j + s, -1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(6 * s - 1, 6 * s):
        _put(out, j, s + md(j + 1, s), 1, E(4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 1))
    for j in range(6 * s - 2, 6 * s - 1):
        _put(out, j, 3 * s + md(j + 1, s), -1,
             W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 2))
    for j in range(6 * s, 7 * s - 1):
        _put(out, j, s + md(j + 1, s), 1, E(4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + 1) + 1))
    for j in range(7 * s - 2, 7 * s - 1):
        _put(out, j, 4 * s + md(j + 1, s), 1,
             W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 2))
    return out


def _c4_9_s1(s, m, ka, kg):
    out: dict = {}
    j = 2 * s
    _put(out, j, j, -1, W(4 * (j + m), 4 * (j + m) + 1), E(4 * (j + 1) + 1))
    j = 4 * s
    _put(out, j, j + 2 * s, 1, E(4 * (j + m) + 2), W(4 * (j + 1) + 2, 4 * j + 3))
    j = 5 * s
    _put(out, j, j, -(ka(3 * (j + m + 1))), W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j + 3))
    j = 5 * s
    _put(out, j, j + s, ka(3 * (j + m + 1)), W(4 * (j + m + 1) + 2, 4 * (j + m) + 3), E(4 * j + 3))
    return out


def _c4_9_sg(s, m, ka, kg):
    out: dict = {}
    for j in range(s - 1, s):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, j, -k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), E(4 * j))
        _put(out, j, j + s, -k1, E(4 * (j + m + 1)), W(4 * j, 4 * j + 1))
    for j in range(s, 2 * s - 1):
        _put(out, j, j, -1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), E(4 * (j + s) + 1))
    for j in range(3 * s, 4 * s - 1):
        _put(out, j, j + 2 * s, 1, E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(5 * s - 1, 5 * s):
        _put(out, j, j + 2 * s, 1, E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(6 * s - 2, 6 * s - 1):
        _put(out, j, md(j + 1, s), ka(3 * (j + m)), E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1)))
    return out


def _c4_10_s1(s, m, ka, kg):
    out: dict = {}
    j = 0
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j + 2 * s, k1, W(4 * (j + m) + 1, 4 * (j + m)), W(4 * j, 4 * (j + 1) + 1))
    j = 0
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j + 4 * s, -k1, W(4 * (j + m) + 2, 4 * (j + m)), W(4 * j, 4 * (j + 1) + 2))
    j = s
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j - s, -1, W(4 * (j + m), 4 * (j + m) + 1), W(4 * (j + 1) + 1, 4 * j))
    j = s
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j + 4 * s, -1, W(4 * (j + m) + 3, 4 * (j + m) + 1), W(4 * (j + 1) + 1, 4 * j + 3))
    j = 3 * s
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j - 3 * s, -1, W(4 * (j + m), 4 * (j + m) + 2), W(4 * (j + 1) + 2, 4 * j))
    j = 3 * s
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j + 2 * s, -1, W(4 * (j + m) + 3, 4 * (j + m) + 2), W(4 * (j + 1) + 2, 4 * j + 3))
    j = 5 * s
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j - 3 * s, -k2, W(4 * (j + m + 1) + 1, 4 * (j + m) + 3), W(4 * j + 3, 4 * j + 1))
    j = 5 * s
    k1 = ka(3 * (m + 1))
    k2 = ka(3 * (5 * s + m + 1))
    _put(out, j, j - s, k2, W(4 * (j + m + 1) + 2, 4 * (j + m) + 3), W(4 * j + 3, 4 * j + 2))
    return out


def _c4_10_sg(s, m, ka, kg):
    out: dict = {}
    for j in range(0, s):
        k1 = ka(3 * (j + m + 1))
        _put(out, j, j, k1, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
        _put(out, j, j + 2 * s, k1, W(4 * (j + m) + 1, 4 * (j + m + 1)), W(4 * j, 4 * (j + s) + 1))
        _put(out, j, j + 4 * s, -k1, W(4 * (j + m) + 2, 4 * (j + m + 1)), W(4 * j, 4 * (j + s) + 2))
        if j == s - 1:
            _put(out, j, md(j + 1, s), k1, E(4 * (j + m + 1)), W(4 * j, 4 * (j + 1)))
        if j == s - 1:
            _put(out, j, j + 5 * s, k1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * j + 3))
    for j in range(s, 2 * s - 1):
        _put(out, j, md(j + 1, s), 1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 1, 4 * (j + 1)))
        _put(out, j, j + 4 * s, -1,
             W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 1, 4 * j + 3))
    for j in range(3 * s - 1, 3 * s):
        _put(out, j, md(j + 1, s), 1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 1, 4 * (j + 1)))
        _put(out, j, j + 3 * s, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), W(4 * (j + s) + 1, 4 * j + 3))
    for j in range(3 * s, 4 * s - 1):
        _put(out, j, md(j + 1, s), 1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * (j + 1)))
        _put(out, j, j + 2 * s, -1,
             W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(5 * s - 1, 5 * s):
        _put(out, j, md(j + 1, s), 1,
             W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * (j + 1)))
        _put(out, j, j + s, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3))
    for j in range(5 * s, 6 * s):
        k1 = ka(3 * (j + m + 1))
        j0 = s * f(j, 6 * s - 1)
        _put(out, j, md(j + 1, s), -k1, W(4 * (j + m + 1), 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1)))
        _put(out, j, 2 * s + md(j + 1, s), -k1,
             W(4 * (j + m + s + 1 + j0) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1 + j0) + 1))
        _put(out, j, 4 * s + md(j + 1, s), k1,
             W(4 * (j + m + s + 1 + j0) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1 + j0) + 2))
        _put(out, j, j, -(f2(j, 6 * s - 1) * k1), W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), E(4 * j + 3))
        if j == 6 * s - 2:
            _put(out, j, 5 * s + md(j + 1, s), -k1, E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 3))
    return out


def _c5_0(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 0
    _put(out, j, 0, ka(0), W(4 * j, 4 * j + 3), E(4 * j))
    return out


def _c5_1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 2 * s + md(2, s)
    _put(out, j, md(j + s + 1, 2 * s), f2(md(j, s), s - 1) * k0,
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 1, 4 * (j + 1)))
    j = 3 * s + md(2, s)
    _put(out, j, md(j + s + 1, 2 * s), -(f2(md(j, s), s - 1) * k0),
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 1, 4 * (j + 1)))
    j = 4 * s + md(2, s) + s * f(s, 1) + s * f(s, 3)
    _put(out, j, 6 * s + md(j, s), -(kg(j + 1 + m) * k0),
         W(4 * (j + m + 1), 4 * (j + m + 2)), W(4 * j + 2, 4 * j + 3))
    return out


def _c5_2(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = md(2, s)
    _put(out, j, md(j + 1, s), k0, E(4 * (j + m) + 3), W(4 * j, 4 * (j + 1)))
    j = s + md(2, s)
    _put(out, j, j + s, f2(md(j, s), s - 1) * kg(j + m) * k0,
         W(4 * (j + m) + 2, 4 * (j + m + 1)), W(4 * j, 4 * j + 1))
    return out


def _c5_3(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = md(2, s)
    _put(out, j, j + 3 * s, -(ka(3 * (j + 1 + m)) * kg(j + m) * f2(md(j, s), s - 1) * k0),
         W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), W(4 * j, 4 * (j + s) + 1))
    j = 3 * s - 1 + md(2, s)
    _put(out, j, s + md(j + 1, s), f2(md(j, s), md(s - 2, s)) * kg(j + 1 + m) * k0,
         W(4 * (j + m + 1) + 2, 4 * (j + m + 2)), W(4 * j + 1, 4 * (j + 1)))
    return out


def _c5_4(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = md(1, s)
    if s == 1:
        _put(out, j, j + 3 * s, kg(j + m) * k0, W(4 * (j + m) + 1, 4 * (j + m)), W(4 * j, 4 * (j + 1) + 1))
    j = md(1, s)
    if s == 1:
        _put(out, j, j + 7 * s, -(kg(j + m) * k0), W(4 * (j + m) + 2, 4 * (j + m)), W(4 * j, 4 * (j + 1) + 2))
    j = md(1, s)
    if s > 1:
        _put(out, j, md(j + 1, s), -(f2(md(j, s), s - 2) * kg(j + m) * k0),
             W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * (j + 1)))
    j = md(1, s)
    if s > 1:
        _put(out, j, s + md(j + 1, s), f2(md(j, s), s - 2) * kg(j + m) * k0,
             E(4 * (j + m + 1)), W(4 * j, 4 * (j + 1)))
    j = 4 * s + 1 - 3 * f(s, 1)
    _put(out, j, md(j + 1, s), f2(s, 1) * f1(md(j, s), s - 2) * kg(j + m) * ka(3 * (j + 1 + m)) * k0,
         W(4 * (j + m) + 3, 4 * (j + m + s + 1 + s * f(s, 1)) + 2), W(4 * (j + s + s * f(s, 1)) + 1, 4 * (j + 1)))
    j = 7 * s + md(1, s)
    _put(out, j, 3 * s + md(j + 1, s), -(f2(md(j, s), md(s - 2, s)) * kg(j + m) * k0),
         W(4 * (j + m + s + 1 + s * f(s, 1)) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1 + s * f(s, 1)) + 1))
    j = 7 * s + md(1, s)
    _put(out, j, 7 * s + md(j + 1, s), f2(md(j, s), md(s - 2, s)) * kg(j + m) * k0,
         W(4 * (j + m + s + 1 + s * f(s, 1)) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1 + s * f(s, 1)) + 2))
    return out


def _c5_5_s1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = s
    _put(out, j, j + s, ka(3 * (j + m)) * k0, W(4 * (j + m), 4 * (j + m) + 2), W(4 * j, 4 * (j + 1) + 1))
    j = s
    _put(out, j, j + 2 * s, ka(3 * (j + m)) * k0, W(4 * (j + m), 4 * (j + m) + 2), W(4 * j, 4 * j + 1))
    j = 2 * s
    _put(out, j, j - 2 * s, k0, W(4 * (j + m) + 1, 4 * (j + m) + 3), W(4 * j + 1, 4 * j))
    j = 2 * s
    _put(out, j, j - s, k0, W(4 * (j + m + 1) + 1, 4 * (j + m) + 3), W(4 * j + 1, 4 * j))
    j = 6 * s
    _put(out, j, j - 3 * s, -(2 * ka(3 * (j + m)) * k0),
         W(4 * (j + m), 4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1) + 1))
    return out


def _c5_5_sg(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 1
    k1 = f2(1, s - 2) * kg(3 * s + 1 + m)
    k2 = kg(5 * s + 1 + m) * kg(5 * s + 2 + m) * f2(1, s - 2)
    _put(out, j, s + md(j + 1, s), -(ka(3 * (j + m)) * f1(md(j, s), s - 2) * k0),
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * j, 4 * (j + 1)))
    j = s + 1
    k1 = f2(1, s - 2) * kg(3 * s + 1 + m)
    k2 = kg(5 * s + 1 + m) * kg(5 * s + 2 + m) * f2(1, s - 2)
    _put(out, j, md(j + 1, s), ka(3 * (j + m)) * f1(md(j, s), s - 2) * k0,
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * j, 4 * (j + 1)))
    j = 3 * s + 1
    k1 = f2(1, s - 2) * kg(3 * s + 1 + m)
    k2 = kg(5 * s + 1 + m) * kg(5 * s + 2 + m) * f2(1, s - 2)
    _put(out, j, md(j + 1, s), k1 * k0,
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 1, 4 * (j + 1)))
    j = 3 * s + 1
    k1 = f2(1, s - 2) * kg(3 * s + 1 + m)
    k2 = kg(5 * s + 1 + m) * kg(5 * s + 2 + m) * f2(1, s - 2)
    _put(out, j, s + md(j + 1, s), k1 * k0,
         W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 1, 4 * (j + 1)))
    j = 5 * s + 1
    k1 = f2(1, s - 2) * kg(3 * s + 1 + m)
    k2 = kg(5 * s + 1 + m) * kg(5 * s + 2 + m) * f2(1, s - 2)
    _put(out, j, 3 * s + md(j + 1, s), k2 * k0, E(4 * (j + m + 2)), W(4 * j + 2, 4 * (j + 1) + 1))
    return out


def _c5_6_s1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 0
    _put(out, j, j + 2 * s, -k0, W(4 * (j + m + 1) + 2, 4 * (j + m) + 3), W(4 * j, 4 * j + 1))
    j = 0
    _put(out, j, j + 3 * s, -k0, W(4 * (j + m + 1) + 1, 4 * (j + m) + 3), W(4 * j, 4 * (j + 1) + 1))
    j = 0
    _put(out, j, j + 5 * s, -k0, W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j, 4 * j + 2))
    j = 0
    _put(out, j, j + 7 * s, k0, E(4 * (j + m) + 3), W(4 * j, 4 * j + 3))
    j = s
    _put(out, j, j - s, -(ka(3 * (j + m)) * k0),
         W(4 * (j + m), 4 * (j + m + 1) + 2), W(4 * (j + 1) + 1, 4 * j))
    j = 5 * s
    _put(out, j, j - 4 * s, k0, W(4 * (j + m + 1) + 1, 4 * (j + m)), W(4 * j + 3, 4 * (j + 1) + 1))
    j = 5 * s
    _put(out, j, j - 2 * s, -k0, W(4 * (j + m) + 1, 4 * (j + m)), W(4 * j + 3, 4 * j + 1))
    return out


def _c5_6_sg(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 2 * s + 1
    _put(out, j, md(j + 1, s), f1(md(j, s), s - 2) * ka(3 * (j + 2 + m)) * k0,
         W(4 * (j + m + 1), 4 * (j + m + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 4 * s + 1
    _put(out, j, 3 * s + md(j + 1, s), -(f2(md(j, s), s - 2) * ka(3 * (j + 2 + m)) * k0),
         E(4 * (j + m + s + 1) + 1), W(4 * (j + s) + 2, 4 * (j + s + 1) + 1))
    return out


def _c5_7_s1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 0
    _put(out, j, j + 4 * s, -k0, W(4 * (j + m), 4 * (j + m) + 3), W(4 * j, 4 * j + 2))
    j = 0
    _put(out, j, j + 5 * s, -k0, W(4 * (j + m), 4 * (j + m) + 3), W(4 * j, 4 * (j + 1) + 2))
    j = s
    _put(out, j, j, k0, W(4 * (j + m) + 2, 4 * (j + m)), W(4 * (j + 1) + 1, 4 * j))
    j = 2 * s
    _put(out, j, j - 2 * s, -k0, W(4 * (j + m) + 2, 4 * (j + m)), W(4 * (j + 1) + 1, 4 * j))
    j = 2 * s
    _put(out, j, j - s, k0, W(4 * (j + m + 1) + 2, 4 * (j + m)), W(4 * (j + 1) + 1, 4 * j))
    j = 3 * s
    _put(out, j, j - 2 * s, -(ka(3 * (j + 2 + m)) * k0),
         W(4 * (j + m) + 2, 4 * (j + m + 1) + 1), W(4 * (j + 1) + 2, 4 * j))
    j = 3 * s
    _put(out, j, j + 2 * s, ka(3 * (j + 2 + m)) * k0,
         W(4 * (j + m), 4 * (j + m + 1) + 1), W(4 * (j + 1) + 2, 4 * j + 2))
    j = 4 * s
    _put(out, j, j - 4 * s, ka(3 * (j + 2 + m)) * k0,
         W(4 * (j + m) + 2, 4 * (j + m + 1) + 1), W(4 * (j + 1) + 2, 4 * j))
    j = 5 * s
    _put(out, j, j - 3 * s, ka(3 * (j + 2 + m)) * k0,
         W(4 * (j + m) + 3, 4 * (j + m) + 2), W(4 * j + 3, 4 * (j + 1) + 1))
    return out


def _c5_7_sg(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 1
    _put(out, j, md(j + 1, s), -(kg(j + 1 + m) * f1(md(j, s), s - 2) * k0),
         W(4 * (j + m + 1) + 2, 4 * (j + m + 1) + 3), W(4 * j, 4 * (j + 1)))
    j = 2 * s + 1
    _put(out, j, s + md(j + 1, s), f2(md(j, s), s - 2) * k0,
         W(4 * (j + m + s + 1) + 2, 4 * (j + m + 2)), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 4 * s + 1
    _put(out, j, 7 * s + md(j, s), -(f1(md(j, s), s - 2) * ka(3 * (j + 2 + m)) * k0),
         W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 2) + 1), W(4 * (j + s) + 2, 4 * j + 3))
    return out


def _c5_8_s1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 0
    _put(out, j, j + 2 * s, -k0, W(4 * (j + m + 1) + 2, 4 * (j + m)), W(4 * j, 4 * (j + 1) + 1))
    j = 0
    _put(out, j, j + 3 * s, -k0, W(4 * (j + m + 1) + 1, 4 * (j + m)), W(4 * j, 4 * j + 2))
    j = 3 * s
    _put(out, j, j - 3 * s, -(ka(3 * (j + 1 + m)) * k0),
         W(4 * (j + m) + 3, 4 * (j + m) + 2), W(4 * (j + 1) + 2, 4 * j))
    j = 3 * s
    _put(out, j, j - s, -(ka(3 * (j + 1 + m)) * k0), E(4 * (j + m) + 2), W(4 * (j + 1) + 2, 4 * j + 1))
    j = 4 * s
    _put(out, j, j - 4 * s, -(ka(3 * (j + 1 + m)) * k0),
         W(4 * (j + m) + 3, 4 * (j + m) + 2), W(4 * (j + 1) + 2, 4 * j))
    j = 5 * s
    _put(out, j, j - 4 * s, k0, W(4 * (j + m + 1) + 2, 4 * (j + m) + 3), W(4 * j + 3, 4 * (j + 1) + 1))
    j = 5 * s
    _put(out, j, j - s, k0, W(4 * (j + m + 1) + 1, 4 * (j + m) + 3), W(4 * j + 3, 4 * j + 2))
    return out


def _c5_8_sg(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 1
    _put(out, j, md(j + 1, s), -(f1(1, s - 2) * k0),
         W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j, 4 * (j + 1)))
    j = 2 * s + 1
    _put(out, j, j, f1(md(j, s), s - 2) * ka(3 * (j + 1 + m)) * k0,
         W(4 * (j + m + s) + 2, 4 * (j + m + s + 1) + 1), E(4 * (j + s) + 1))
    return out


def _c5_9_s1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 2 * s
    _put(out, j, j - s, ka(3 * (j + m)) * k0,
         W(4 * (j + m), 4 * (j + m + 1) + 1), W(4 * (j + 1) + 1, 4 * j + 1))
    j = 4 * s
    _put(out, j, j + 2 * s, ka(3 * (j + m)) * k0,
         W(4 * (j + m) + 2, 4 * (j + m + 1) + 2), W(4 * (j + 1) + 2, 4 * j + 3))
    return out


def _c5_9_sg(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 2 * s
    k1 = f2(s, 3) * ka(3 * (m + 2))
    _put(out, j, md(j + 1, s), k1 * k0,
         W(4 * (j + m + 1) + 3, 4 * (j + m + s + 2) + 1), W(4 * (j + s) + 1, 4 * (j + 1)))
    j = 4 * s
    k1 = f2(s, 3) * ka(3 * (m + 2))
    _put(out, j, md(j + 1, s), k1 * k0,
         W(4 * (j + m + 1) + 3, 4 * (j + m + s + 2) + 2), W(4 * (j + s) + 2, 4 * (j + 1)))
    return out


def _c5_10_s1(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = 3 * s
    _put(out, j, j - 3 * s, -(ka(3 * (j + 1 + m)) * k0),
         W(4 * (j + m), 4 * (j + m + 1) + 2), W(4 * j + 1, 4 * j))
    j = 3 * s
    _put(out, j, j + 2 * s, -(ka(3 * (j + 1 + m)) * k0),
         W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), W(4 * j + 1, 4 * j + 3))
    return out


def _c5_10_sg(s, m, ka, kg):
    out: dict = {}
    k0 = ka(3 * md(3, s))
    j = s
    _put(out, j, md(j + 1, s), -(f2(md(j, s), s - 1) * f2(md(j, s), s - 3) * ka(3 * (j + 1 + m)) * k0),
         W(4 * (j + m + 1), 4 * (j + m + 1) + 1), W(4 * j, 4 * (j + 1)))
    j = 5 * s
    _put(out, j, 5 * s + md(j, s), f2(md(j, s), s - 3) * k0,
         W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), W(4 * j + 2, 4 * j + 3))
    return out


def _c23_0(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    return out


def _c23_1(s, m, ka, kg):
    out: dict = {}
    j = 6 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c23_2(s, m, ka, kg):
    out: dict = {}
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c23_3(s, m, ka, kg):
    out: dict = {}
    j = 4 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    return out


def _c23_4(s, m, ka, kg):
    out: dict = {}
    j = s
    _put(out, j, j, 1, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    return out


def _c23_5(s, m, ka, kg):
    out: dict = {}
    j = 2 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 1))
    j = 3 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 1))
    return out


def _c23_6(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    j = 8 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c23_7(s, m, ka, kg):
    out: dict = {}
    j = 4 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 2))
    return out


def _c23_8(s, m, ka, kg):
    out: dict = {}
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3))
    return out


def _c23_9(s, m, ka, kg):
    out: dict = {}
    j = s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * (j + s) + 1))
    j = 2 * s
    _put(out, j, j, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * (j + s) + 1))
    return out


def _c23_10(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    return out


def _c24_0(s, m, ka, kg):
    out: dict = {}
    j = 5
    _put(out, j, j, 1, W(4 * j + 3, 4 * (j + 1) + 3), E(4 * j + 3))
    return out


def _c24_1(s, m, ka, kg):
    out: dict = {}
    j = 4 * s
    _put(out, j, j, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), E(4 * j + 2))
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), E(4 * j + 2))
    return out


def _c24_2(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), E(4 * j))
    return out


def _c24_3(s, m, ka, kg):
    out: dict = {}
    j = 2 * s
    _put(out, j, j - 2 * s, 1, W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j + 1, 4 * j))
    j = 3 * s
    _put(out, j, j - 2 * s, -1, W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j + 1, 4 * j))
    return out


def _c24_4(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, E(4 * (j + m) + 3), W(4 * j, 4 * (j + 1)))
    j = s
    _put(out, j, j, 1, E(4 * (j + m)), W(4 * j, 4 * (j + 1)))
    return out


def _c24_5(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, E(4 * (j + m) + 1), W(4 * j, 4 * (j + 1)))
    j = s
    _put(out, j, j, 1, E(4 * (j + m) + 1), W(4 * j, 4 * (j + 1)))
    return out


def _c24_6(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, E(4 * (j + m)), W(4 * j, 4 * (j + 1)))
    return out


def _c24_7(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, E(4 * (j + m) + 2), W(4 * j, 4 * (j + 1)))
    j = s
    _put(out, j, j, 1, E(4 * (j + m) + 2), W(4 * j, 4 * (j + 1)))
    return out


def _c24_8(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, 1, E(4 * (j + m) + 3), W(4 * j, 4 * (j + 1)))
    return out


def _c24_9(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j + s, -1, W(4 * (j + m), 4 * (j + m) + 3), W(4 * j, 4 * j + 1))
    j = 0
    _put(out, j, j + 2 * s, 1, W(4 * (j + m), 4 * (j + m) + 3), W(4 * j, 4 * (j + 1) + 1))
    return out


def _c24_10(s, m, ka, kg):
    out: dict = {}
    j = 0
    _put(out, j, j, -1, W(4 * (j + m), 4 * (j + m + 1)), E(4 * j))
    j = 5 * s
    _put(out, j, j - 5 * s, 1, W(4 * (j + m), 4 * (j + m) + 3), W(4 * j + 3, 4 * j))
    j = 5 * s
    _put(out, j, j, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), E(4 * j + 3))
    return out


# (case, r0) -> {variant: (builder, (domain units, codomain units))}
TABLES = {
    (1, 0): {"any": (_c1_0, (6, 6))},
    (1, 1): {"any": (_c1_1, (7, 7))},
    (1, 2): {"any": (_c1_2, (6, 6))},
    (1, 3): {"any": (_c1_3, (8, 8))},
    (1, 4): {"any": (_c1_4, (9, 9))},
    (1, 5): {"any": (_c1_5, (8, 8))},
    (1, 6): {"any": (_c1_6, (9, 9))},
    (1, 7): {"any": (_c1_7, (8, 8))},
    (1, 8): {"any": (_c1_8, (6, 6))},
    (1, 9): {"any": (_c1_9, (7, 7))},
    (1, 10): {"any": (_c1_10, (6, 6))},
    (2, 0): {"any": (_c2_0, (6, 6))},
    (2, 1): {"any": (_c2_1, (7, 7))},
    (2, 2): {"any": (_c2_2, (6, 6))},
    (2, 3): {"any": (_c2_3, (8, 8))},
    (2, 4): {"any": (_c2_4, (9, 9))},
    (2, 5): {"any": (_c2_5, (8, 8))},
    (2, 6): {"any": (_c2_6, (9, 9))},
    (2, 7): {"any": (_c2_7, (8, 8))},
    (2, 8): {"any": (_c2_8, (6, 6))},
    (2, 9): {"any": (_c2_9, (7, 7))},
    (2, 10): {"any": (_c2_10, (6, 6))},
    (3, 0): {"any": (_c3_0, (7, 6))},
    (3, 1): {"any": (_c3_1, (6, 7))},
    (3, 2): {"any": (_c3_2, (8, 6))},
    (3, 3): {"any": (_c3_3, (9, 8))},
    (3, 4): {"any": (_c3_4, (8, 9))},
    (3, 5): {"any": (_c3_5, (9, 8))},
    (3, 6): {"any": (_c3_6, (8, 9))},
    (3, 7): {"any": (_c3_7, (6, 8))},
    (3, 8): {"any": (_c3_8, (7, 6))},
    (3, 9): {"any": (_c3_9, (6, 7))},
    (3, 10): {"any": (_c3_10, (6, 6))},
    (4, 0): {"any": (_c4_0, (7, 6))},
    (4, 1): {"any": (_c4_1, (6, 7))},
    (4, 2): {"any": (_c4_2, (8, 6))},
    (4, 3): {"any": (_c4_3, (9, 8))},
    (4, 4): {"any": (_c4_4, (8, 9))},
    (4, 5): {"s1": (_c4_5_s1, (9, 8)), "s>1": (_c4_5_sg, (9, 8))},
    (4, 6): {"s1": (_c4_6_s1, (8, 9)), "s>1": (_c4_6_sg, (8, 9))},
    (4, 7): {"s1": (_c4_7_s1, (6, 8)), "s>1": (_c4_7_sg, (6, 8))},
    (4, 8): {"s1": (_c4_8_s1, (7, 6)), "s>1": (_c4_8_sg, (7, 6))},
    (4, 9): {"s1": (_c4_9_s1, (6, 7)), "s>1": (_c4_9_sg, (6, 7))},
    (4, 10): {"s1": (_c4_10_s1, (6, 6)), "s>1": (_c4_10_sg, (6, 6))},
    (5, 0): {"any": (_c5_0, (6, 6))},
    (5, 1): {"any": (_c5_1, (8, 7))},
    (5, 2): {"any": (_c5_2, (9, 6))},
    (5, 3): {"any": (_c5_3, (8, 8))},
    (5, 4): {"any": (_c5_4, (9, 9))},
    (5, 5): {"s1": (_c5_5_s1, (8, 8)), "s>1": (_c5_5_sg, (8, 8))},
    (5, 6): {"s1": (_c5_6_s1, (6, 9)), "s>1": (_c5_6_sg, (6, 9))},
    (5, 7): {"s1": (_c5_7_s1, (7, 8)), "s>1": (_c5_7_sg, (7, 8))},
    (5, 8): {"s1": (_c5_8_s1, (6, 6)), "s>1": (_c5_8_sg, (6, 6))},
    (5, 9): {"s1": (_c5_9_s1, (6, 7)), "s>1": (_c5_9_sg, (6, 7))},
    (5, 10): {"s1": (_c5_10_s1, (7, 6)), "s>1": (_c5_10_sg, (7, 6))},
    (23, 0): {"any": (_c23_0, (6, 6))},
    (23, 1): {"any": (_c23_1, (7, 7))},
    (23, 2): {"any": (_c23_2, (6, 6))},
    (23, 3): {"any": (_c23_3, (8, 8))},
    (23, 4): {"any": (_c23_4, (9, 9))},
    (23, 5): {"any": (_c23_5, (8, 8))},
    (23, 6): {"any": (_c23_6, (9, 9))},
    (23, 7): {"any": (_c23_7, (8, 8))},
    (23, 8): {"any": (_c23_8, (6, 6))},
    (23, 9): {"any": (_c23_9, (7, 7))},
    (23, 10): {"any": (_c23_10, (6, 6))},
    (24, 0): {"any": (_c24_0, (6, 6))},
    (24, 1): {"any": (_c24_1, (7, 7))},
    (24, 2): {"any": (_c24_2, (6, 6))},
    (24, 3): {"any": (_c24_3, (8, 8))},
    (24, 4): {"any": (_c24_4, (9, 9))},
    (24, 5): {"any": (_c24_5, (8, 8))},
    (24, 6): {"any": (_c24_6, (9, 9))},
    (24, 7): {"any": (_c24_7, (8, 8))},
    (24, 8): {"any": (_c24_8, (6, 6))},
    (24, 9): {"any": (_c24_9, (7, 7))},
    (24, 10): {"any": (_c24_10, (6, 6))},
}

# families whose twist rule also multiplies by (-1)^ell0
SIGN_FLIP = frozenset({3, 5})
