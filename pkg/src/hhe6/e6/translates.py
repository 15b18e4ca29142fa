"""Translates of generator cocycles as explicit chain-map stages.

``Omega^{r0}(Y_t)`` is a bimodule map ``Q_{t+r0} -> Q_{r0}``; the family
``r0 = 0, 1, 2, ..`` lifts the cocycle ``Y_t`` along the resolution.  For the
families with a stored table the checks below confirm, stage by stage, that
the entries type-check, that stage 0 is the generator itself, that every
square ``d o phi_{r0} = phi_{r0-1} o d`` commutes, and that the stages in
later periods are the twisted copies of the first eleven.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..bimodule import BimoduleError, BimoduleMap
from ..field import vec_axpy
from .generators import (GeneratorError, admissible_degrees, instantiate_generator, kappa_alpha, omega0_cochain,
                         resolve_segment)
from .quiver import gamma, sigma_power
from .translate_tables import SIGN_FLIP, TABLES

FIXTURE_FAMILIES = (1, 2, 3, 4, 5, 23, 24)


class TranslateError(ValueError):
    pass


def _kappa_gamma(s: int, i: int, ell: int) -> int:
    return sigma_power(s, ell).arrow_map[gamma(i, s)][0]


def table_for(i: int, r0: int, s: int):
    """``(builder, (domain units, codomain units))`` for ``Omega^{r0}(Y^(i))``."""
    try:
        variants = TABLES[(i, r0)]
    except KeyError:
        raise TranslateError(f"no stored translate for family {i}, r0={r0}") from None
    if "any" in variants:
        return variants["any"]
    return variants["s1" if s == 1 else "s>1"]


def translate_m(t: int, r0: int) -> int:
    """The shift ``m`` entering the index formulas of ``Omega^{r0}(Y_t)``."""
    return r0 // 2


def translate_entries(i: int, s: int, t: int, r0: int) -> dict:
    ell = t // 11
    build, _ = table_for(i, r0, s)
    return build(s, translate_m(t, r0), lambda a: kappa_alpha(s, a, ell), lambda a: _kappa_gamma(s, a, ell))


def instantiate_translate(res, i: int, t: int, r0: int) -> BimoduleMap:
    """``Omega^{r0}(Y^(i)_t)`` for ``0 <= r0 <= 10`` as a map ``Q_{t+r0} -> Q_{r0}``."""
    s, alg = res.s, res.alg
    f = alg.field
    _, (du, cu) = table_for(i, r0, s)
    dom, cod = res.term(t + r0), res.term(r0)
    if (len(dom), len(cod)) != (du * s, cu * s):
        raise TranslateError(f"family {i}, r0={r0}: table is {du}s x {cu}s, terms are {len(dom)} x {len(cod)}")
    cols = [dict() for _ in dom]
    for j, entries in translate_entries(i, s, t, r0).items():
        if not 0 <= j < len(dom):
            raise TranslateError(f"family {i}, r0={r0}: column {j} out of range")
        ic, jc = dom[j]
        for e in entries:
            if not 0 <= e.row < len(cod):
                raise TranslateError(f"family {i}, r0={r0}: row {e.row} out of range")
            ik, jk = cod[e.row]
            try:
                a = resolve_segment(alg, s, e.left, ik, ic)
                b = resolve_segment(alg, s, e.right, jc, jk)
            except GeneratorError as exc:
                raise TranslateError(f"family {i}, r0={r0}, column {j}, row {e.row}: {exc}") from None
            acc = cols[j].setdefault(e.row, {})
            vec_axpy(f, acc, f(e.coef), {(a, b): f.one()})
    cols = [{k: v for k, v in c.items() if v} for c in cols]
    phi = BimoduleMap(alg, dom, cod, cols)
    phi.validate()
    return phi


def twisted_translate(res, i: int, t: int, t0: int) -> BimoduleMap:
    """``Omega^{t0}(Y_t)`` for any ``t0``, from the stored stage ``t0 mod 11``."""
    ell0, r0 = divmod(t0, 11)
    phi = instantiate_translate(res, i, t, r0)
    if ell0 == 0:
        return phi
    sp = sigma_power(res.s, ell0)
    phi = phi.twisted_left(sp.vertex_map, sp.arrow_map)
    if i in SIGN_FLIP and ell0 % 2:
        f = res.alg.field
        neg = f.neg(f.one())
        phi = BimoduleMap(phi.alg, phi.domain, phi.codomain,
                          [{k: {key: f.mul(neg, v) for key, v in ent.items()} for k, ent in col.items()}
                           for col in phi.cols])
    return phi


def maps_equal(f1: BimoduleMap, f2: BimoduleMap) -> bool:
    if f1.domain != f2.domain or f1.codomain != f2.codomain:
        return False
    return all({k: e for k, e in a.items() if e} == {k: e for k, e in b.items() if e}
               for a, b in zip(f1.cols, f2.cols))


def square_commutes(res, phi_hi: BimoduleMap, phi_lo: BimoduleMap, t: int, t0: int) -> bool:
    """``d_{t0-1} o phi_{t0} == phi_{t0-1} o d_{t+t0-1}``."""
    lhs = res.differential(t0 - 1).compose(phi_hi)
    rhs = phi_lo.compose(res.differential(t + t0 - 1))
    return maps_equal(lhs, rhs)


@dataclass
class TranslateReport:
    family: int
    t: int
    s: int
    char: int
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def translate_fixture_check(res, i: int, t: int, ell0: int = 1) -> TranslateReport:
    """Type-check every stored stage, then check stage 0, the squares and the twist rule."""
    rep = TranslateReport(i, t, res.s, res.char)
    stages: dict[int, BimoduleMap] = {}
    for t0 in range(11 * ell0 + 11):
        try:
            stages[t0] = twisted_translate(res, i, t, t0)
        except (TranslateError, GeneratorError) as exc:
            rep.failures.append(f"stage {t0}: {exc}")
        rep.checked += 1
    if 0 in stages:
        gen = instantiate_generator(res, i, t, check_admissible=False).omega0
        if not maps_equal(stages[0], gen):
            rep.failures.append("stage 0 differs from the generator")
        rep.checked += 1
    for t0 in range(1, 11 * ell0 + 11):
        if t0 in stages and t0 - 1 in stages:
            if not square_commutes(res, stages[t0], stages[t0 - 1], t, t0):
                rep.failures.append(f"square at stage {t0} does not commute")
            rep.checked += 1
    return rep


def fixture_degrees(i: int, s: int, char: int, period: int) -> list[int]:
    """Degrees ``t`` at which the fixture for family ``i`` is meaningful."""
    return admissible_degrees(i, s, char, period)


# ---------------------------------------------------------------------------
# comparison with the generic lift


def lift_as_maps(res, t: int, stages: list[dict]) -> list[BimoduleMap]:
    """Convert the output of ``lift_cocycle`` to bimodule maps."""
    out = []
    for k, phi in enumerate(stages):
        dom, cod = res.term(t + k), res.term(k)
        cols = [dict() for _ in dom]
        for c, img in phi.items():
            for (n, x, y), v in img.items():
                cols[c].setdefault(n, {})[(x, y)] = v
        out.append(BimoduleMap(res.alg, dom, cod, cols))
    return out


def _difference(f1: BimoduleMap, f2: BimoduleMap) -> BimoduleMap:
    f = f1.alg.field
    neg = f.neg(f.one())
    cols = []
    for a, b in zip(f1.cols, f2.cols):
        col: dict = {}
        for k in set(a) | set(b):
            acc = dict(a.get(k, {}))
            vec_axpy(f, acc, neg, b.get(k, {}))
            if acc:
                col[k] = acc
        cols.append(col)
    return BimoduleMap(f1.alg, f1.domain, f1.codomain, cols)


def homotopy_witness(res, t: int, phis: list[BimoduleMap], psis: list[BimoduleMap]) -> list[BimoduleMap] | None:
    """Maps ``h_k: Q_{t+k} -> Q_{k+1}`` with ``phi_k - psi_k = d h_k + h_{k-1} d``, or ``None``.

    Both families must be chain maps over the same cocycle; the recursion then
    always succeeds on an exact complex, and a failure means they differ in
    cohomology.
    """
    hs: list[BimoduleMap] = []
    for k, (phi, psi) in enumerate(zip(phis, psis)):
        diff = _difference(phi, psi)
        if k == 0:
            rem = diff
            # the two stages must agree after multiplication into the algebra
            if any(omega0_cochain(rem).values()):
                return None
        else:
            rem = _difference(diff, hs[-1].compose(res.differential(t + k - 1)))
        dom, cod = res.term(t + k), res.term(k + 1)
        cols = [dict() for _ in dom]
        for c, (i, j) in enumerate(dom):
            rhs = {(n, x, y): v for n, ent in rem.cols[c].items() for (x, y), v in ent.items()}
            try:
                sol = res._solve(k + 1, i, j, rhs)
            except BimoduleError:
                return None
            for (n, x, y), v in sol.items():
                cols[c].setdefault(n, {})[(x, y)] = v
        hs.append(BimoduleMap(res.alg, dom, cod, cols))
    return hs
