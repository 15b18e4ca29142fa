"""Entry tables of the differentials ``d_0 .. d_10`` in label form.

Each column generator of ``d_r`` (a map ``Q_{r+1} -> Q_r``) is sent to a sum
of entries ``coef * a (x) b`` placed in a row.  ``a`` and ``b`` are given by a
pair of integer labels ``(start, end)`` naming the path walked; ``E(x)`` is
the trivial path at label ``x``.  The left factor ``a`` runs from the row's
left vertex to the column's left vertex, the right factor ``b`` from the
column's right vertex to the row's right vertex.
"""

from __future__ import annotations

from typing import NamedTuple


class Seg(NamedTuple):
    start: int
    end: int
    trivial: bool = False


class Entry(NamedTuple):
    row: int
    coef: int
    left: Seg
    right: Seg


def W(a: int, b: int) -> Seg:
    return Seg(a, b, False)


def E(a: int) -> Seg:
    return Seg(a, a, True)


# helper functions of the index formulas
def f(x: int, y: int) -> int:
    return 1 if x == y else 0


def h(x: int, y: int) -> int:
    if x < y:
        return 1 if x % 2 == 0 else 0
    return 1 if x % 2 else 0


def f0(x: int, y: int) -> int:
    return 1 if x < y else 0


def f1(x: int, y: int) -> int:
    return 1 if x < y else -1


def f2(x: int, y: int) -> int:
    return 1 if x == y else -1


# number of columns of d_r in units of s, and of rows
SHAPES = {0: (7, 6), 1: (6, 7), 2: (8, 6), 3: (9, 8), 4: (8, 9), 5: (9, 8),
          6: (8, 9), 7: (6, 8), 8: (7, 6), 9: (6, 7), 10: (6, 6)}


def _d0(s, j, m):
    if j < 2 * s:
        return [Entry(j % s, 1, W(4 * (j + m), 4 * (j + m) + 1), E(4 * j)),
                Entry(j + s, -1, E(4 * (j + m) + 1), W(4 * j, 4 * j + 1))]
    if j < 4 * s:
        return [Entry(j - s, 1, W(4 * (j + m) + 1, 4 * (j + m) + 2), E(4 * j + 1)),
                Entry(j + s, -1, E(4 * (j + m) + 2), W(4 * j + 1, 4 * j + 2))]
    if j < 6 * s:
        return [Entry(j - s, 1, W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j + 2)),
                Entry(j % s + 5 * s, -1, E(4 * (j + m) + 3), W(4 * j + 2, 4 * j + 3))]
    return [Entry((j + 1) % s, -1, E(4 * (j + m + 1)), W(4 * j + 3, 4 * (j + 1))),
            Entry(j - s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1)), E(4 * j + 3))]


def _d1(s, j, m):
    out = []
    i2 = j % s
    if j < s:
        for j1 in range(3):
            out.append(Entry(j + 2 * j1 * s, 1, W(4 * (j + m) + 1 + j1, 4 * (j + m) + 3), W(4 * j, 4 * j + j1)))
            out.append(Entry(j + (2 * j1 + 1) * s, -1, W(4 * (j + m + s) + 1 + j1, 4 * (j + m) + 3),
                             W(4 * j, 4 * (j + s) + j1)))
        return out
    if j < 3 * s:
        e1 = (W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1)))
        if j < 2 * s:
            out.append(Entry(j - s + 1, 1, *e1))
        else:
            out.append(Entry((j + s + 1) % (2 * s), 1, *e1))
        out.append(Entry(j + s, 1, W(4 * (j + m + s) + 2, 4 * (j + m + s + 1) + 2), E(4 * (j + s) + 1)))
        e4 = (E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + s + 1) + 1))
        if j < 2 * s:
            out.append(Entry(j + s + 1, 1, *e4))
        else:
            out.append(Entry((j + s + 1) % (2 * s) + 2 * s, 1, *e4))
        out.append(Entry(j + 3 * s, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + s) + 2)))
        out.append(Entry(j % s + 6 * s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * j + 3)))
        return out
    if j < 5 * s:
        e1 = (E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + 1)))
        if j < 4 * s:
            out.append(Entry((j + 1) % (2 * s), 1, *e1))
        else:
            out.append(Entry(j - 4 * s + 1, 1, *e1))
        out.append(Entry(j + s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), E(4 * (j + s) + 2)))
        out.append(Entry(j % s + 6 * s, 1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3)))
        return out
    g = 1 - f(i2, s - 1)
    return [
        Entry((j + 1) % s, 1, W(4 * (j + m + g * s + 1) + 1, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1))),
        Entry((j + 1) % s + 2 * s, 1, W(4 * (j + m + g * s + 1) + 2, 4 * (j + m + 2)),
              W(4 * j + 3, 4 * (j + g * s + 1) + 1)),
        Entry((j + 1) % s + 4 * s, 1, W(4 * (j + m + 1) + 3, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + g * s + 1) + 2)),
        Entry(j + s, 1, W(4 * (j + m + 1), 4 * (j + m + 2)), E(4 * j + 3)),
        Entry((j + 1) % s + 6 * s, 1, E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1) + 3)),
    ]


def _d2(s, j, m):
    i2 = j % s
    if j < 2 * s:
        return [
            Entry(j % s, 1, W(4 * (j + m - 1) + 3, 4 * (j + m) + 2), E(4 * j)),
            Entry(j + s, -f1(j, s), E(4 * (j + m) + 2), W(4 * j, 4 * j + 1)),
            Entry((j + s) % (2 * s) + 3 * s, f1(j, s), W(4 * (j + m) + 1, 4 * (j + m) + 2), W(4 * j, 4 * (j + s) + 2)),
        ]
    if j < 4 * s:
        return [
            Entry((j + 1) % s, -f1(j, 3 * s) * f1(i2, s - 1), E(4 * (j + m) + 3), W(4 * j + 1, 4 * (j + 1))),
            Entry(j - s, 1, W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j + 1)),
            Entry(j + s, -1, W(4 * (j + m + s) + 1, 4 * (j + m) + 3), W(4 * j + 1, 4 * j + 2)),
        ]
    if j < 6 * s:
        out = []
        if j < 5 * s - 1 or j == 6 * s - 1:
            out.append(Entry((j + 1) % s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1))))
        out.append(Entry(j - s, 1, W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j + 2)))
        out.append(Entry(j % s + 5 * s, -1, E(4 * (j + m + 1)), W(4 * j + 2, 4 * j + 3)))
        return out
    out = []
    if j < 7 * s - 1 or j == 8 * s - 1:
        out.append(Entry((j + 1) % s, -1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1))))
    out.append(Entry((j + s + 1) % (2 * s) + 3 * s, -1, E(4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + s + 1) + 2)))
    out.append(Entry(j % s + 5 * s, 1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), E(4 * j + 3)))
    return out


def _d3(s, j, m):
    j2 = j // s
    if j < 2 * s:
        return [
            Entry(j % s, 1, W(4 * (j + m + j2 * s) + 2, 4 * (j + m) + 3 + j2), E(4 * j)),
            Entry(j + s + 3 * j2 * s, -1, W(4 * (j + m + s) + 2 + 2 * j2, 4 * (j + m) + 3 + j2), W(4 * j, 4 * j + 2 * j2)),
            Entry(j + (2 + j2) * s, 1, E(4 * (j + m) + 3 + j2), W(4 * j, 4 * (j + j2 * s) + 1 + j2)),
            Entry((j + s) % (2 * s) + 2 * s, 1, W(4 * (j + m) + 3, 4 * (j + m) + 3 + j2), W(4 * j, 4 * (j + s) + 1)),
        ]
    if j < 4 * s:
        return [
            Entry(j, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 1), E(4 * j + 1)),
            Entry(j + 2 * s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1), W(4 * j + 1, 4 * j + 2)),
            Entry((j + s) % (2 * s) + 6 * s, 1, E(4 * (j + m + s + 1) + 1), W(4 * j + 1, 4 * j + 3)),
        ]
    if j < 6 * s:
        out = []
        if j >= 5 * s:
            out.append(Entry((j + 1) % (2 * s), -f1(j, 6 * s - 1), E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * (j + 1))))
        out.append(Entry(j % s + 4 * s, 1, W(4 * (j + m + 1), 4 * (j + m + 1) + j2 - 3), E(4 * (j + (j2 - 4) * s) + 2)))
        out.append(Entry(j + 2 * s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + j2 - 3),
                         W(4 * (j + (j2 - 4) * s) + 2, 4 * j + 3)))
        return out
    if j < 8 * s:
        out = []
        if j >= 7 * s:
            out.append(Entry(j - 7 * s + 1, f1(j, 8 * s - 1), E(4 * (j + m + s + 1) + 2), W(4 * j + 2, 4 * (j + 1))))
        out.append(Entry(j % s + 5 * s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 1 + j2 - 6),
                         E(4 * (j + (7 - j2) * s) + 2)))
        out.append(Entry((j + s) % (2 * s) + 6 * s, 1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 1 + j2 - 6),
                         W(4 * (j + (7 - j2) * s) + 2, 4 * j + 3)))
        return out
    F = f(j, 9 * s - 1)
    return [
        Entry((j + 1) % s, f1(j, 9 * s - 1), W(4 * (j + m + F * s + 1) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1))),
        Entry((j + 1) % s + 2 * s, f1(j, 9 * s - 1), E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + F * s + 1) + 1)),
        Entry(j - 2 * s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 3), E(4 * j + 3)),
        Entry(j - s, -1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), E(4 * j + 3)),
    ]


def _d4(s, j, m):
    i2 = j % s
    out = []
    if j < 2 * s:
        if j < s:
            out.append(Entry(j, 1, W(4 * (j + m - 1) + 3, 4 * (j + m) + 1), E(4 * j)))
        out.append(Entry(j % s + s, -f1(j, s), W(4 * (j + m), 4 * (j + m) + 1), E(4 * j)))
        out.append(Entry((j + s) % (2 * s) + 2 * s, -1, E(4 * (j + m) + 1), W(4 * j, 4 * (j + s) + 1)))
        out.append(Entry(j + (5 - f0(j, s)) * s, 1, E(4 * (j + m) + 1), W(4 * j, 4 * j + 2)))
        return out
    if j < 4 * s:
        if j < 3 * s - 1 or j == 4 * s - 1:
            out.append(Entry((j + 1) % s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1))))
        out.append(Entry((j + 1) % s + s, -f1(i2, s - 1) * f1(j, 3 * s), E(4 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1))))
        out.append(Entry(j, 1, W(4 * (j + m + s) + 1, 4 * (j + m + 1)), E(4 * j + 1)))
        out.append(Entry(j + (4 - f0(j, 3 * s)) * s, -1, W(4 * (j + m + s) + 2, 4 * (j + m + 1)), W(4 * j + 1, 4 * j + 2)))
        return out
    if j < 6 * s:
        if j < 5 * s - 1 or j == 6 * s - 1:
            out.append(Entry((j + 1) % s, 1, E(4 * (j + m) + 3), W(4 * j + 2, 4 * (j + 1))))
        out.append(Entry(j + (1 - f0(j, 5 * s)) * s, 1, W(4 * (j + m) + 1, 4 * (j + m) + 3), E(4 * j + 2)))
        out.append(Entry(j + (2 - f0(j, 5 * s)) * s, -1, W(4 * (j + m + s) + 2, 4 * (j + m) + 3), E(4 * j + 2)))
        out.append(Entry(j % s + 8 * s, -f1(j, 5 * s), E(4 * (j + m) + 3), W(4 * j + 2, 4 * j + 3)))
        return out
    c = f1(j, 7 * s)
    if j < 7 * s - 1 or j == 8 * s - 1:
        out.append(Entry((j + 1) % s, -c, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + 1))))
    out.append(Entry((j + s + 1) % (2 * s) + 2 * s, c, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2),
                     W(4 * j + 3, 4 * (j + s + 1) + 1)))
    e3 = (E(4 * (j + m + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 2))
    if j < 7 * s - 1 or j == 8 * s - 1:
        out.append(Entry((j + 1) % s + 7 * s, -c, *e3))
    else:
        out.append(Entry((j + 1) % s + 5 * s, -c, *e3))
    out.append(Entry(j % s + 8 * s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), E(4 * j + 3)))
    return out


def _d5(s, j, m):
    j2 = j // s
    out = []
    if j < s:
        for j1 in range(3):
            c = f1(j1, 2)
            out.append(Entry(j + 2 * j1 * s, c, W(4 * (j + m) + 1 + j1 + 2 * f(j1, 1), 4 * (j + m + 1)), W(4 * j, 4 * j + j1)))
            out.append(Entry(j + (2 * j1 + 1) * s, c, W(4 * (j + m + s) + 1 + j1 + 2 * f(j1, 1), 4 * (j + m + 1)),
                             W(4 * j, 4 * (j + s) + j1)))
        return out
    if j < 3 * s:
        out.append(Entry((j + s + 1) % (2 * s), -f1(j, 2 * s), W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + j2),
                         W(4 * (j + s * (2 - j2)) + 1, 4 * (j + 1))))
        out.append(Entry(j % s + 2 * s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + j2), E(4 * (j + s * (2 - j2)) + 1)))
        if j >= 2 * s:
            out.append(Entry(j + 2 * s, -1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), W(4 * j + 1, 4 * j + 2)))
            out.append(Entry(j + 5 * s, -1, E(4 * (j + m + s + 1) + 2), W(4 * j + 1, 4 * j + 3)))
        return out
    if j < 5 * s:
        out.append(Entry((j + 1) % (2 * s), -f1(j, 4 * s), W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + j2 - 2),
                         W(4 * (j + s * (j2 - 3)) + 1, 4 * (j + 1))))
        out.append(Entry(j % s + 3 * s, 1, W(4 * (j + m + 1), 4 * (j + m + 1) + j2 - 2), E(4 * (j + s * (j2 - 3)) + 1)))
        if j >= 4 * s:
            out.append(Entry(j + s, -1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), W(4 * (j + s) + 1, 4 * (j + s) + 2)))
            out.append(Entry(j + 2 * s, 1, E(4 * (j + m + 1) + 2), W(4 * (j + s) + 1, 4 * j + 3)))
        return out
    if j < 7 * s:
        return [
            Entry(j - s, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), E(4 * (j + s) + 2)),
            Entry(j + s, f1(j, 6 * s), E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3)),
        ]
    if j < 8 * s:
        return [
            Entry(j - 7 * s + 1, 1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1))),
            Entry((j + 1) % (2 * s), 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1))),
            Entry(j - 3 * s + 1, -1, E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + s + 1) + 2)),
            Entry((j + 1) % (2 * s) + 4 * s, -1, E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 2)),
            Entry(j - s, 1, W(4 * (j + m + s + 1) + 2, 4 * (j + m + 1) + 3), E(4 * j + 3)),
            Entry(j, -1, W(4 * (j + m + 1) + 2, 4 * (j + m + 1) + 3), E(4 * j + 3)),
        ]
    return [
        Entry((j + s + 1) % (2 * s) + 2 * s, -1, E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + s + 1) + 1)),
        Entry(j - 2 * s, 1, W(4 * (j + m + 1) + 2, 4 * (j + m + 2)), E(4 * j + 3)),
    ]


def _d6(s, j, m):
    j2 = j // s
    out = []
    if j < 2 * s:
        return [
            Entry(j % s, 1, W(4 * (j + m), 4 * (j + m) + 2), E(4 * j)),
            Entry(j + (j2 + 1) * s, -1, W(4 * (j + m) + 1, 4 * (j + m) + 2), W(4 * j, 4 * j + 1)),
            Entry(j + (4 - 3 * j2) * s, -1, E(4 * (j + m) + 2), W(4 * j, 4 * (j + s) + 1)),
            Entry(j + 5 * s, 1, E(4 * (j + m) + 2), W(4 * j, 4 * j + 2)),
        ]
    if j < 4 * s:
        return [
            Entry(j + s * (j2 - 3), 1, W(4 * (j + m) + 1, 4 * (j + m) + 3), E(4 * j + 1)),
            Entry(j + s * (j2 - 2), -1, W(4 * (j + m + s) + 2, 4 * (j + m) + 3), E(4 * j + 1)),
            Entry(j + 3 * s, -1, W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j + 1, 4 * j + 2)),
            Entry(j % s + 7 * s, 1, E(4 * (j + m) + 3), W(4 * j + 1, 4 * j + 3)),
        ]
    if j < 6 * s:
        if j >= 5 * s:
            out.append(Entry((j + 1) % s, 1, E(4 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1))))
        out.append(Entry(j + s, 1, W(4 * (j + m) + 2, 4 * (j + m + 1)), E(4 * j + 2)))
        if j >= 5 * s:
            out.append(Entry(j + 2 * s, -1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * j + 2, 4 * j + 3)))
        out.append(Entry(j % s + 8 * s, -f1(j, 5 * s), E(4 * (j + m + 1)), W(4 * j + 2, 4 * j + 3)))
        return out
    if j < 7 * s:
        out.append(Entry((j + 1) % s, -1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1))))
    e2 = (E(4 * (j + m + 1) + 1), W(4 * j + 3, 4 * (j + 1) + 1))
    if j < 7 * s - 1 or j == 8 * s - 1:
        out.append(Entry((j + 1) % (2 * s) + s, 1, *e2))
    else:
        out.append(Entry((j + 1) % (2 * s) + 2 * s, 1, *e2))
    if j < 7 * s:
        out.append(Entry(j + s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), E(4 * j + 3)))
    out.append(Entry(j % s + 8 * s, -f1(j, 7 * s), W(4 * (j + m + 1), 4 * (j + m + 1) + 1), E(4 * j + 3)))
    return out


def _d7(s, j, m):
    if j < s:
        return [
            Entry(j, 1, W(4 * (j + m) + 2, 4 * (j + m) + 3), E(4 * j)),
            Entry(j + s, -1, W(4 * (j + m + s) + 2, 4 * (j + m) + 3), E(4 * j)),
            Entry(j + 2 * s, 1, E(4 * (j + m) + 3), W(4 * j, 4 * j + 1)),
            Entry(j + 3 * s, -1, E(4 * (j + m) + 3), W(4 * j, 4 * (j + s) + 1)),
        ]
    if j < 3 * s:
        return [
            Entry((j + s + 1) % (2 * s), -1, E(4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + 1))),
            Entry(j + s, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), E(4 * (j + s) + 1)),
            Entry(j + 3 * s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * (j + s) + 2)),
            Entry(j + 5 * s, -1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2), W(4 * (j + s) + 1, 4 * j + 3)),
        ]
    if j < 5 * s:
        return [
            Entry(j + s, 1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), E(4 * (j + s) + 2)),
            Entry(j % (2 * s) + 6 * s, 1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3)),
        ]
    F = f(j, 6 * s - 1)
    return [
        Entry((j + 1) % s + s, 1, W(4 * (j + m + 1 + s * F) + 2, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1))),
        Entry((j + 1) % s + 2 * s, -1, W(4 * (j + m + 1) + 3, 4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1 + (1 + F) * s) + 1)),
        Entry((j + 1) % s + 4 * s, -1, E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1 + (1 + F) * s) + 2)),
        Entry((j + 1) % s + 5 * s, -1, E(4 * (j + m + 2)), W(4 * j + 3, 4 * (j + 1 + s * F) + 2)),
        Entry(j + s, 1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + 2)), E(4 * j + 3)),
        Entry(j + 2 * s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 2)), E(4 * j + 3)),
    ]


def _d8(s, j, m):
    out = []
    if j < s:
        return [
            Entry(j, 1, W(4 * (j + m - 1) + 3, 4 * (j + m) + 3), E(4 * j)),
            Entry((j + 1) % s, -f1(j, s - 1), E(4 * (j + m) + 3), W(4 * j, 4 * (j + 1))),
            Entry(j + s, -1, W(4 * (j + m) + 2, 4 * (j + m) + 3), W(4 * j, 4 * j + 1)),
            Entry(j + 2 * s, 1, W(4 * (j + m + s) + 2, 4 * (j + m) + 3), W(4 * j, 4 * (j + s) + 1)),
            Entry(j + 3 * s, 1, W(4 * (j + m + s) + 1, 4 * (j + m) + 3), W(4 * j, 4 * j + 2)),
            Entry(j + 4 * s, -1, W(4 * (j + m) + 1, 4 * (j + m) + 3), W(4 * j, 4 * (j + s) + 2)),
        ]
    if j < 3 * s:
        if j < 2 * s - 1 or j == 3 * s - 1:
            out.append(Entry((j + 1) % s, 1, W(4 * (j + m) + 3, 4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + 1))))
        out.append(Entry(j, 1, W(4 * (j + m + s) + 2, 4 * (j + m + 1)), E(4 * (j + s) + 1)))
        out.append(Entry(j + 2 * s, -1, W(4 * (j + m) + 1, 4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + s) + 2)))
        out.append(Entry(j % s + 5 * s, 1, E(4 * (j + m + 1)), W(4 * (j + s) + 1, 4 * j + 3)))
        return out
    if j < 5 * s:
        if j < 4 * s - 1 or j == 5 * s - 1:
            out.append(Entry((j + 1) % s, -1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + 1))))
        out.append(Entry(j, 1, W(4 * (j + m) + 1, 4 * (j + m + 1) + 1), E(4 * (j + s) + 2)))
        out.append(Entry((j + s + 1) % (2 * s) + 3 * s, -1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * (j + s + 1) + 2)))
        out.append(Entry(j % s + 5 * s, -1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), W(4 * (j + s) + 2, 4 * j + 3)))
        return out
    if 6 * s - 1 <= j < 7 * s - 1:
        out.append(Entry((j + 1) % s, 1, W(4 * (j + m) + 3, 4 * (j + m + s + 1) + 2), W(4 * j + 3, 4 * (j + 1))))
    out.append(Entry((j + s + 1) % (2 * s) + s, 1, E(4 * (j + m + s + 1) + 2), W(4 * j + 3, 4 * (j + s + 1) + 1)))
    out.append(Entry((j + 1) % (2 * s) + 3 * s, 1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + s + 1) + 2),
                     W(4 * j + 3, 4 * (j + 1) + 2)))
    out.append(Entry(j % s + 5 * s, 1, W(4 * (j + m + 1), 4 * (j + m + s + 1) + 2), E(4 * j + 3)))
    return out


def _d9(s, j, m):
    if j < s:
        return [
            Entry(j, 1, W(4 * (j + m) + 3, 4 * (j + m + 1)), E(4 * j)),
            Entry(j + s, 1, E(4 * (j + m + 1)), W(4 * j, 4 * j + 1)),
            Entry(j + 2 * s, -1, E(4 * (j + m + 1)), W(4 * j, 4 * (j + s) + 1)),
        ]
    if j < 3 * s:
        return [
            Entry(j, 1, W(4 * (j + m + 1), 4 * (j + m + 1) + 1), E(4 * (j + s) + 1)),
            Entry(j + 2 * s, 1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 1, 4 * (j + s) + 2)),
        ]
    if j < 5 * s:
        return [
            Entry(j, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2), E(4 * (j + s) + 2)),
            Entry(j % (2 * s) + 5 * s, 1, E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3)),
        ]
    return [
        Entry((j + 1) % s, f1(j, 6 * s - 1), E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1))),
        Entry(j, 1, W(4 * (j + m + s + 1) + 2, 4 * (j + m + 1) + 3), E(4 * j + 3)),
        Entry(j + s, -1, W(4 * (j + m + 1) + 2, 4 * (j + m + 1) + 3), E(4 * j + 3)),
    ]


def _d10(s, j, m):
    i2 = j % s
    if j < s:
        out = [Entry((j + 1) % s, -f1(j, s - 1), E(4 * (j + m + 1)), W(4 * j, 4 * (j + 1)))]
        for j1 in range(3):
            out.append(Entry(j + (2 * j1 + 1) * s, -f1(j1, 1), W(4 * (j + m + s) + 1 + j1, 4 * (j + m + 1)),
                             W(4 * j, 4 * j + 1 + j1)))
            out.append(Entry(j + 2 * j1 * s, f1(j1, 2), W(4 * (j + m) + j1, 4 * (j + m + 1)), W(4 * j, 4 * (j + s) + j1)))
        return out
    if j < 3 * s:
        return [
            Entry((j + 1) % s, f1(i2, s - 1) * f1(j, 2 * s), W(4 * (j + m + 1), 4 * (j + m + 1) + 1),
                  W(4 * (j + s) + 1, 4 * (j + 1))),
            Entry(j, 1, W(4 * (j + m) + 1, 4 * (j + m + 1) + 1), E(4 * (j + s) + 1)),
            Entry((j + s + 1) % (2 * s) + s, -1, E(4 * (j + m + 1) + 1), W(4 * (j + s) + 1, 4 * (j + s + 1) + 1)),
            Entry(j + 2 * s, -1, W(4 * (j + m) + 2, 4 * (j + m + 1) + 1), W(4 * (j + s) + 1, 4 * (j + s) + 2)),
            Entry(j % s + 5 * s, -f1(j, 2 * s), W(4 * (j + m) + 3, 4 * (j + m + 1) + 1), W(4 * (j + s) + 1, 4 * j + 3)),
        ]
    if j < 5 * s:
        return [
            Entry((j + 1) % s, -f1(i2, s - 1) * f1(j, 4 * s), W(4 * (j + m + 1), 4 * (j + m + 1) + 2),
                  W(4 * (j + s) + 2, 4 * (j + 1))),
            Entry((j + s + 1) % (2 * s) + s, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 2),
                  W(4 * (j + s) + 2, 4 * (j + s + 1) + 1)),
            Entry(j, 1, W(4 * (j + m) + 2, 4 * (j + m + 1) + 2), E(4 * (j + s) + 2)),
            Entry((j + s + 1) % (2 * s) + 3 * s, -1, E(4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * (j + s + 1) + 2)),
            Entry(j % s + 5 * s, f1(j, 4 * s), W(4 * (j + m) + 3, 4 * (j + m + 1) + 2), W(4 * (j + s) + 2, 4 * j + 3)),
        ]
    c = f1(j, 6 * s - 1)
    return [
        Entry((j + 1) % s, -c, W(4 * (j + m + 1), 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1))),
        Entry(j - 4 * s + 1, 1, W(4 * (j + m + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + s + 1) + 1)),
        Entry((j + 1) % (2 * s) + s, -1, W(4 * (j + m + s + 1) + 1, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 1)),
        Entry(j - 2 * s + 1, -1, W(4 * (j + m + 1) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + s + 1) + 2)),
        Entry((j + 1) % (2 * s) + 3 * s, 1, W(4 * (j + m + s + 1) + 2, 4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 2)),
        Entry(j, 1, W(4 * (j + m) + 3, 4 * (j + m + 1) + 3), E(4 * j + 3)),
        Entry((j + 1) % s + 5 * s, -c, E(4 * (j + m + 1) + 3), W(4 * j + 3, 4 * (j + 1) + 3)),
    ]


_FAMILIES = [_d0, _d1, _d2, _d3, _d4, _d5, _d6, _d7, _d8, _d9, _d10]


def column_entries(r: int, s: int, j: int) -> list[Entry]:
    """Label-level entries of column ``j`` of ``d_r`` (``0 <= r <= 10``)."""
    ncols = SHAPES[r][0] * s
    if not 0 <= j < ncols:
        raise IndexError(f"column {j} out of range for d_{r} at s={s}")
    return _FAMILIES[r](s, j, r // 2)
