"""Shared builders for randomised tests."""

from __future__ import annotations

import random

from hhe6.bimodule import BimoduleMap


def random_map(alg, dom, cod, rnd: random.Random, density: float = 0.3) -> BimoduleMap:
    """A random bimodule map ``dom -> cod`` with entries in the admissible corners."""
    f = alg.field
    p = f.p or 7
    cols = []
    for (ic, jc) in dom:
        col: dict = {}
        for k, (ik, jk) in enumerate(cod):
            lefts, rights = alg.corner_basis(ic, ik), alg.corner_basis(jk, jc)
            for a in lefts:
                for b in rights:
                    if rnd.random() < density:
                        v = f(rnd.randrange(1, p))
                        if v:
                            col.setdefault(k, {})[(a, b)] = v
        cols.append(col)
    m = BimoduleMap(alg, tuple(dom), tuple(cod), cols)
    m.validate()
    return m


def as_stage(m: BimoduleMap) -> dict:
    """A bimodule map in the ``{column: {(row, x, y): coef}}`` form used by lifts."""
    out = {}
    for c, col in enumerate(m.cols):
        img = {(k, a, b): v for k, ent in col.items() for (a, b), v in ent.items() if v}
        if img:
            out[c] = img
    return out


def random_cochain(res, t: int, rnd: random.Random) -> dict:
    f = res.field
    p = f.p or 5
    return {b: f(rnd.randrange(1, p)) for b in res.cochain_basis(t) if rnd.random() < 0.5}


def random_cocycle(res, t: int, rnd: random.Random) -> dict:
    """A random combination of the kernel basis of ``delta^t``."""
    f = res.field
    H = res.cohomology(t)
    out: dict = {}
    for z in H.kernel:
        c = f(rnd.randrange(0, f.p or 5))
        for n, v in z.items():
            key = H.basis[n]
            out[key] = f.add(out.get(key, f.zero()), f.mul(c, v))
    return {k: v for k, v in out.items() if v}
