"""The E6-type quiver with its relations, vertex labels and the automorphism sigma.

Vertices carry integer labels ``4q + k``.  The type ``k`` selects one of four
families; families 0 and 3 are indexed by ``q mod s``, families 1 and 2 by
``q mod 2s``.  Vertex indices are laid out family by family, which is also
the order of the summands of the degree-zero resolution term::

    [0, s)    family 0 (labels 4q)
    [s, 3s)   family 1 (labels 4q+1)
    [3s, 5s)  family 2 (labels 4q+2)
    [5s, 6s)  family 3 (labels 4q+3)

Arrows: ``alpha_{3t}``, ``alpha_{3t+1}``, ``alpha_{3t+2}`` (``t`` mod 2s) walk
from label ``4t`` to ``4t+3``; ``gamma_t`` (``t`` mod s) joins ``4t+3`` to
``4(t+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from ..field import FieldSpec
from ..pathalg import Algebra, AmbiguousPath, ArrowLabel, NoPath, Quiver

N_RANK = 6  # the Dynkin rank entering every index formula
NILPOTENCY = 5  # all paths of length 5 vanish


def label_vertex(label: int, s: int) -> int:
    """Vertex index of an integer label."""
    k = label % 4
    q = (label - k) // 4
    if k == 0:
        return q % s
    if k == 1:
        return s + q % (2 * s)
    if k == 2:
        return 3 * s + q % (2 * s)
    return 5 * s + q % s


def vertex_label(v: int, s: int) -> int:
    """Smallest non-negative label of a vertex."""
    if v < s:
        return 4 * v
    if v < 3 * s:
        return 4 * (v - s) + 1
    if v < 5 * s:
        return 4 * (v - 3 * s) + 2
    if v < 6 * s:
        return 4 * (v - 5 * s) + 3
    raise ValueError(f"vertex {v} out of range for s={s}")


def alpha(i: int, s: int) -> int:
    return i % (6 * s)


def gamma(i: int, s: int) -> int:
    return 6 * s + i % s


def build_e6_quiver(s: int) -> Quiver:
    if s < 1:
        raise ValueError("s must be positive")
    names = []
    for prefix, count in (("A", s), ("B", 2 * s), ("C", 2 * s), ("D", s)):
        names += [f"{prefix}{q}" for q in range(count)]
    arrows = []
    for i in range(6 * s):
        t, k = divmod(i, 3)
        arrows.append(ArrowLabel(f"a{i}", label_vertex(4 * t + k, s), label_vertex(4 * t + k + 1, s)))
    for t in range(s):
        arrows.append(ArrowLabel(f"g{t}", label_vertex(4 * t + 3, s), label_vertex(4 * t + 4, s)))
    return Quiver(tuple(names), tuple(arrows))


def e6_relations(s: int) -> list[dict]:
    """Commutativity and zero relations (paths of length 5 are handled by the bound)."""
    rels = []
    for t in range(2 * s):
        u = t + s
        if t < s:
            rels.append({
                (alpha(3 * t, s), alpha(3 * t + 1, s), alpha(3 * t + 2, s)): 1,
                (alpha(3 * u, s), alpha(3 * u + 1, s), alpha(3 * u + 2, s)): -1,
            })
        # alpha_{3t} gamma_{t-1} alpha_{3(t+s)-1}; traversal order reversed
        rels.append({(alpha(3 * (t + s) - 1, s), gamma(t - 1, s), alpha(3 * t, s)): 1})
    return rels


@lru_cache(maxsize=None)
def e6_algebra(s: int, char: int) -> Algebra:
    return Algebra(build_e6_quiver(s), FieldSpec.of_characteristic(char), e6_relations(s), NILPOTENCY)


# ---------------------------------------------------------------------------
# sigma


def sigma_arrow(i: int, s: int) -> tuple[int, int]:
    """Image of arrow index ``i`` under sigma as ``(sign, arrow index)``."""
    n = N_RANK
    if i < 6 * s:
        r3, r6 = i % 3, i % (6 * s)
        if r3 == 0:
            sign = -1 if r6 < 3 * s else 1
        elif r3 == 1:
            sign = -1
        else:
            sign = -1 if r6 >= 3 * s else 1
        return sign, alpha(i + 3 * (n + s), s)
    t = i - 6 * s
    sign = 1 if t % s == s - 1 else -1
    return sign, gamma(t + n, s)


def sigma_label(label: int, s: int, power: int = 1) -> int:
    return label + 4 * (N_RANK + s) * power


def sigma_vertex(v: int, s: int, power: int = 1) -> int:
    return label_vertex(sigma_label(vertex_label(v, s), s, power), s)


@dataclass(frozen=True)
class SigmaPower:
    """``sigma^power`` as a vertex map plus a signed arrow map."""

    s: int
    power: int
    vertex_map: tuple[int, ...]
    arrow_map: dict

    def __hash__(self):
        return hash((self.s, self.power))


def sigma_power(s: int, power: int) -> SigmaPower:
    nv, na = 6 * s, 7 * s
    vmap = tuple(sigma_vertex(v, s, power) for v in range(nv))
    amap = {}
    for a in range(na):
        sign, b = 1, a
        for _ in range(power):
            sg, b = sigma_arrow(b, s)
            sign *= sg
        amap[a] = (sign, b)
    return SigmaPower(s, power, vmap, amap)


def sigma_order(s: int, char: int) -> int:
    """Order of sigma, found by iterating its action on vertices and signed arrows."""
    p = char
    k = 1
    while True:
        sp = sigma_power(s, k)
        if all(sp.vertex_map[v] == v for v in range(6 * s)) and all(
            b == a and ((sign - 1) % p == 0 if p else sign == 1) for a, (sign, b) in sp.arrow_map.items()
        ):
            return k
        k += 1


def sigma_order_formula(s: int, char: int) -> int:
    m0 = 2 * s // gcd(N_RANK + s, 2 * s)
    if char == 2 or m0 % 4 == 0:
        return m0
    return 2 * m0


def period(s: int, char: int) -> int:
    """Minimal period ``M`` of the bimodule resolution."""
    m0 = 2 * s // gcd(N_RANK + s, 2 * s)
    return 11 * m0 if (char == 2 or m0 % 4 == 0) else 22 * m0


# ---------------------------------------------------------------------------
# label paths


def label_path_candidates(alg: Algebra, s: int, l1: int, l2: int) -> list[int]:
    """Basis paths from label ``l1`` to label ``l2`` whose length matches the labels.

    The length is ``l2 - l1`` modulo ``4s``; for ``s = 1`` a zero difference
    leaves both the trivial path and a length-four path as candidates.
    """
    u, v = label_vertex(l1, s), label_vertex(l2, s)
    diff = (l2 - l1) % (4 * s)
    out = []
    for length in range(diff, NILPOTENCY, 4 * s):
        out.extend(alg.paths_of_length(u, v, length))
    return out


def label_path(alg: Algebra, s: int, l1: int, l2: int) -> int:
    cands = label_path_candidates(alg, s, l1, l2)
    if not cands:
        raise NoPath(f"no path from label {l1} to label {l2} (s={s})")
    if len(cands) > 1:
        raise AmbiguousPath(f"labels {l1} -> {l2} admit paths of several lengths (s={s})")
    return cands[0]
