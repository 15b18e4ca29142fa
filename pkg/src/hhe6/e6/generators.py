"""Generator cocycles ``Y^(i)_t`` and the sign function ``kappa``.

A generator of degree ``t`` is written as a map ``Q_t -> Q_0`` in the same
label form as the differentials; composing with multiplication gives the
cochain in ``Hom(Q_t, A)``.  Signs ``kappa^l(w)`` record how ``sigma^l``
rescales a basis path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..bimodule import BimoduleMap
from ..field import vec_axpy
from ..pathalg import Algebra
from .dims import CONDITIONS, condition_holds
from .quiver import NILPOTENCY, alpha, label_path_candidates, label_vertex, sigma_power
from .tables import E, Entry, W, f1

GENERATOR_RANGE = range(1, 25)


class GeneratorError(ValueError):
    pass


# ---------------------------------------------------------------------------
# kappa


def kappa(alg: Algebra, s: int, w: int, ell: int) -> int:
    """The sign ``c`` with ``sigma^ell(w) = c * w'`` for a basis path ``w``."""
    sp = sigma_power(s, ell)
    img = alg.automorphism_image(sp.vertex_map, sp.arrow_map, w)
    if len(img) != 1:
        raise GeneratorError(f"sigma^{ell} does not send path {alg.path_name(w)} to a multiple of a path")
    (c,) = img.values()
    f = alg.field
    if c == f.one():
        return 1
    if c == f.neg(f.one()):
        return -1
    raise GeneratorError(f"unexpected coefficient {c}")


def kappa_alpha(s: int, i: int, ell: int) -> int:
    """``kappa^ell(alpha_i)``, read off the signed arrow map."""
    return sigma_power(s, ell).arrow_map[alpha(i, s)][0]


# ---------------------------------------------------------------------------
# matrices in label form: generator -> (columns in units of s, entries)


def _y1(s, ell, m, k):
    out = {}
    for j in range(6 * s):
        if j < s:
            out[j] = [Entry(j, k(3 * (j + m)), E(4 * j), E(4 * j))]
        elif j < 3 * s:
            out[j] = [Entry(j, 1, E(4 * (j + s) + 1), E(4 * (j + s) + 1))]
        elif j < 5 * s:
            out[j] = [Entry(j, 1, E(4 * (j + s) + 2), E(4 * (j + s) + 2))]
        else:
            out[j] = [Entry(j, k(3 * (j + m)), E(4 * j + 3), E(4 * j + 3))]
    return out


def _y2(s, ell, m, k):
    return {0: [Entry(0, k(0), W(0, 4), E(0))]}


def _y3(s, ell, m, k):
    return {0: [Entry(0, 1, W(0, 1), E(0))], s: [Entry(0, 1, W(0, 4 * s + 1), E(0))]}


def _y4(s, ell, m, k):
    out = {}
    for j in range(s):
        out[j] = [Entry(j, 1, W(4 * j, 4 * (j + s) + 1), E(4 * j))]
    for j in range(5 * s - 1, 6 * s - 1):
        out[j] = [Entry(j - s, -k(3 * (j + m)), W(4 * j + 2, 4 * j + 3), E(4 * j + 2))]
    return out


def _y5(s, ell, m, k):
    return {0: [Entry(0, k(0), W(0, 3), E(0))]}


def _y6(s, ell, m, k):
    out = {}
    for j in range(s):
        out[j] = [Entry(j, 1, W(4 * j, 4 * j + 2), E(4 * j))]
    for j in range(3 * s, 4 * s):
        out[j] = [Entry(j - s, -k(3 * (j + m)), W(4 * j + 1, 4 * j + 3), E(4 * j + 1))]
    for j in range(4 * s, 6 * s):
        if j < 5 * s - 1 or j == 6 * s - 1:
            out[j] = [Entry(j - s, -k(3 * (j + m + 1)), W(4 * j + 2, 4 * (j + 1)), E(4 * j + 2))]
    for j in range(6 * s, 8 * s):
        if j < 7 * s - 1 or j == 8 * s - 1:
            out[j] = [Entry(5 * s + j % s, 1, W(4 * j + 3, 4 * (j + 1) + 1), E(4 * j + 3))]
    return out


def _y7(s, ell, m, k):
    out = {}
    for j in range(2 * s):
        out[j] = [Entry(j % s, 1, W(4 * j, 4 * (j + s) + 2), E(4 * j))]
    for j in range(2 * s, 4 * s):
        out[j] = [Entry(j - s, 1, W(4 * j + 1, 4 * j + 3), E(4 * j + 1))]
    for j in range(4 * s, 6 * s):
        out[j] = [Entry(j - s, 1, W(4 * j + 2, 4 * (j + 1)), E(4 * j + 2))]
    return out


def _y8(s, ell, m, k):
    return {0: [Entry(0, 1, W(0, 3), E(0))]}


def _y9(s, ell, m, k):
    out = {}
    for j in range(s, 2 * s):
        out[j] = [Entry(j - s, k(3 * (j + m)), E(4 * j), E(4 * j))]
    for j in range(2 * s, 4 * s):
        out[j] = [Entry(j - s, 1, E(4 * j + 1), E(4 * j + 1))]
    for j in range(5 * s, 6 * s):
        out[j] = [Entry(j - 2 * s, 1, E(4 * (j + s) + 2), E(4 * (j + s) + 2))]
    for j in range(7 * s, 8 * s):
        out[j] = [Entry(j - 3 * s, 1, E(4 * j + 2), E(4 * j + 2))]
    for j in range(8 * s, 9 * s):
        out[j] = [Entry(j - 3 * s, -k(3 * (j + m)), E(4 * j + 3), E(4 * j + 3))]
    return out


def _y10(s, ell, m, k):
    return {s: [Entry(0, k(6), W(0, 4), E(0))]}


def _y11(s, ell, m, k):
    out = {}
    for j in range(2 * s):
        out[j] = [Entry(j % s, 1, W(4 * j, 4 * j + 1), E(4 * j))]
    for j in range(2 * s, 4 * s):
        out[j] = [Entry(j - s, k(3 * (j + m + 1)), W(4 * j + 1, 4 * (j + 1)), E(4 * j + 1))]
    for j in range(4 * s, 6 * s):
        out[j] = [Entry(j - s, -k(3 * (j + m)), W(4 * j + 2, 4 * j + 3), E(4 * j + 2))]
    for j in range(6 * s, 8 * s):
        out[j] = [Entry(5 * s + j % s, f1(j, 7 * s), W(4 * j + 3, 4 * (j + 1) + 2), E(4 * j + 3))]
    return out


def _y12(s, ell, m, k):
    return {j: [Entry(row, k(3 * (j + m)), W(4 * j + 2, 4 * j + 3), E(4 * j + 2))]
            for row, j in ((3 * s, 4 * s), (4 * s, 5 * s))}


def _y13(s, ell, m, k):
    out = {}
    for j in range(s, 2 * s):
        out[j] = [Entry(j, 1, E(4 * (j + s) + 1), E(4 * (j + s) + 1))]
    for j in range(3 * s, 4 * s):
        out[j] = [Entry(j - s, 1, E(4 * j + 1), E(4 * j + 1))]
    for j in range(5 * s, 7 * s):
        out[j] = [Entry(j - 2 * s, 1, E(4 * (j + s) + 2), E(4 * (j + s) + 2))]
    for j in range(8 * s, 9 * s):
        out[j] = [Entry(j - 3 * s, 1, W(4 * j + 3, 4 * (j + 1)), E(4 * j + 3))]
    return out


def _y14(s, ell, m, k):
    j = 7 * s
    return {j: [Entry(5 * s, k(3 * (j + m)), W(4 * j + 3, 4 * (j + 1) + 3), E(4 * j + 3))]}


def _y15(s, ell, m, k):
    out = {}
    for j in range(s):
        out[j] = [Entry(j, k(3 * (j + m)), E(4 * j), E(4 * j))]
    for j in range(2 * s, 3 * s):
        out[j] = [Entry(j - s, 1, W(4 * j + 1, 4 * j + 2), E(4 * j + 1))]
    for j in range(4 * s, 5 * s):
        out[j] = [Entry(j - 2 * s, 1, W(4 * (j + s) + 1, 4 * (j + s) + 2), E(4 * (j + s) + 1))]
    for j in range(7 * s, 8 * s):
        out[j] = [Entry(j - 2 * s, k(3 * (j + m)), E(4 * j + 3), E(4 * j + 3))]
    return out


def _y16(s, ell, m, k):
    return {0: [Entry(0, 1, W(0, 2), E(0))], 2 * s: [Entry(s, 1, W(1, 3), E(1))]}


def _y17(s, ell, m, k):
    return {0: [Entry(0, 1, W(0, 4 * s + 2), E(0))], s: [Entry(0, 1, W(0, 2), E(0))]}


def _y18(s, ell, m, k):
    out = {}
    for j in range(s, 3 * s):
        out[j] = [Entry(j, 1, W(4 * (j + s) + 1, 4 * (j + s) + 2), E(4 * (j + s) + 1))]
    for j in range(5 * s, 6 * s):
        out[j] = [Entry(j, -k(3 * (j + m + 1)), W(4 * j + 3, 4 * (j + 1)), E(4 * j + 3))]
    return out


def _y19(s, ell, m, k):
    return {j: [Entry(j, k(3 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + 1)), E(4 * (j + s) + 1))]
            for j in (s, 2 * s)}


def _y20(s, ell, m, k):
    out = {}
    for j in range(s):
        out[j] = [Entry(j, k(3 * (j + m)), W(4 * j, 4 * j + 3), E(4 * j))]
    for j in range(s, 2 * s):
        out[j] = [Entry(j, -k(3 * (j + m + 1)), W(4 * (j + s) + 1, 4 * (j + 1)), E(4 * (j + s) + 1))]
    for j in range(3 * s, 4 * s):
        out[j] = [Entry(j, 1, W(4 * (j + s) + 2, 4 * (j + s + 1) + 1), E(4 * (j + s) + 2))]
    for j in range(6 * s, 7 * s):
        out[j] = [Entry(j - s, 1, W(4 * j + 3, 4 * (j + 1) + 2), E(4 * j + 3))]
    return out


def _y21(s, ell, m, k):
    return {0: [Entry(0, -k(15), W(0, 4), E(0))]}


def _y22(s, ell, m, k):
    out = {}
    for j in range(s):
        out[j] = [Entry(j, k(3 * (j + m)), E(4 * j), E(4 * j))]
    for j in range(5 * s, 6 * s):
        out[j] = [Entry(j, -k(3 * (j + m)), E(4 * j + 3), E(4 * j + 3))]
    return out


def _y23(s, ell, m, k):
    return {0: [Entry(0, 1, W(0, 4), E(0))]}


def _y24(s, ell, m, k):
    return {5: [Entry(5, 1, W(3, 7), E(3))]}


_TABLES = {1: _y1, 2: _y2, 3: _y3, 4: _y4, 5: _y5, 6: _y6, 7: _y7, 8: _y8, 9: _y9, 10: _y10,
           11: _y11, 12: _y12, 13: _y13, 14: _y14, 15: _y15, 16: _y16, 17: _y17, 18: _y18,
           19: _y19, 20: _y20, 21: _y21, 22: _y22, 23: _y23, 24: _y24}

# printed number of columns (units of s) of each generator matrix
GEN_COLUMNS = {1: 6, 2: 6, 3: 7, 4: 7, 5: 6, 6: 8, 7: 8, 8: 9, 9: 9, 10: 9, 11: 8, 12: 8,
               13: 9, 14: 9, 15: 9, 16: 8, 17: 8, 18: 6, 19: 7, 20: 7, 21: 6, 22: 6, 23: 6, 24: 6}


def label_entries(i: int, s: int, t: int) -> dict[int, list[Entry]]:
    ell, r = divmod(t, 11)
    m = r // 2
    return _TABLES[i](s, ell, m, lambda a: kappa_alpha(s, a, ell))


# ---------------------------------------------------------------------------
# admissibility


def admissible(i: int, s: int, char: int, t: int, period: int) -> bool:
    """Whether ``Y^(i)_t`` is one of the generators for these parameters."""
    if not 0 <= t < period:
        return False
    if i <= 22:
        return condition_holds(i, s, char, t)
    if s != 1 or t != 0:
        return False
    return i == 24 or char != 3


def admissible_degrees(i: int, s: int, char: int, period: int) -> list[int]:
    return [t for t in range(period) if admissible(i, s, char, t, period)]


# ---------------------------------------------------------------------------
# instantiation


def resolve_segment(alg: Algebra, s: int, seg, u: int, v: int) -> int:
    """The path of a label segment, required to run from vertex ``u`` to ``v``."""
    if seg.trivial:
        if u != v:
            raise GeneratorError("trivial factor between different vertices")
        return alg.idempotents[u]
    if label_vertex(seg.start, s) != u or label_vertex(seg.end, s) != v:
        raise GeneratorError(f"segment {seg.start}->{seg.end} does not join the expected vertices")
    lit = seg.end - seg.start
    cands = label_path_candidates(alg, s, seg.start, seg.end)
    if len(cands) > 1:
        exact = [c for c in cands if alg.basis[c].length == lit]
        # a literal length beyond the nilpotency bound still names a non-trivial path
        cands = exact or [c for c in cands if alg.basis[c].length > 0]
    if len(cands) != 1:
        raise GeneratorError(f"segment {seg.start}->{seg.end} does not name a unique path")
    return cands[0]


@dataclass
class GeneratorCocycle:
    family: int
    t: int
    s: int
    char: int
    omega0: BimoduleMap  # Q_t -> Q_0
    cochain: dict  # {(k, z): coef} in Hom(Q_t, A)


def instantiate_generator(res, i: int, t: int, check_admissible: bool = True) -> GeneratorCocycle:
    """Build ``Y^(i)_t`` on the resolution ``res``."""
    s, char = res.s, res.char
    if i not in _TABLES:
        raise GeneratorError(f"no generator family {i}")
    if check_admissible and not admissible(i, s, char, t, res.period):
        raise GeneratorError(f"Y^({i})_{t} is not a generator for s={s}, char={char}")
    alg = res.alg
    f = alg.field
    dom = res.term(t)
    cod = res.term(0)
    if len(dom) != GEN_COLUMNS[i] * s:
        raise GeneratorError(f"Y^({i}) expects {GEN_COLUMNS[i] * s} columns, Q_{t} has {len(dom)}")
    cols = [dict() for _ in dom]
    for j, entries in label_entries(i, s, t).items():
        if not 0 <= j < len(dom):
            raise GeneratorError(f"Y^({i})_{t}: column {j} out of range")
        ic, jc = dom[j]
        for e in entries:
            ik, jk = cod[e.row]
            a = resolve_segment(alg, s, e.left, ik, ic)
            b = resolve_segment(alg, s, e.right, jc, jk)
            acc = cols[j].setdefault(e.row, {})
            vec_axpy(f, acc, f(e.coef), {(a, b): f.one()})
    cols = [{k: v for k, v in c.items() if v} for c in cols]
    omega0 = BimoduleMap(alg, dom, cod, cols)
    omega0.validate()
    return GeneratorCocycle(i, t, s, char, omega0, omega0_cochain(omega0))


def omega0_cochain(phi: BimoduleMap) -> dict:
    """The cochain ``mu o phi`` of a map into ``Q_0``."""
    alg, f = phi.alg, phi.alg.field
    out: dict = {}
    for c, col in enumerate(phi.cols):
        acc: dict = {}
        for k, ent in col.items():
            for (a, b), v in ent.items():
                vec_axpy(f, acc, v, alg.mul_basis(a, b))
        for z, v in acc.items():
            out[(c, z)] = v
    return out


@lru_cache(maxsize=None)
def generator_list(s: int, char: int) -> tuple[tuple[int, int], ...]:
    """All admissible ``(i, t)`` with ``t`` below the period."""
    from .quiver import period

    M = period(s, char)
    return tuple((i, t) for i in GENERATOR_RANGE for t in admissible_degrees(i, s, char, M))
