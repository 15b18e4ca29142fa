"""The resolution validator suite as a list of named checks."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from ..parallel import pmap
from . import tables
from .happel import happel_check
from .quiver import sigma_power
from .resolution import E6Resolution, Mutation, ResolutionError, term_summands_from_formula

HAPPEL_MAX = 9  # Ext between simples is compared through this degree


@dataclass(frozen=True)
class CheckRow:
    check: str
    degree: int | None
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.check, "degree": self.degree, "ok": self.ok, "detail": self.detail}


def _failed_degree(msg: str) -> int | None:
    m = re.search(r"d_(\d+)", msg)
    return int(m.group(1)) if m else None


def expected_term(s: int, t: int) -> Counter:
    """Summands of ``Q_t`` from the closed formulas, twisted into later periods."""
    ell, r = divmod(t, 11)
    sp = sigma_power(s, ell)
    return Counter((sp.vertex_map[i], j) for i, j in term_summands_from_formula(s, r))


def verify_resolution(s: int, char: int, max_degree: int, mutation: Mutation | None = None,
                      happel: bool = True) -> list[CheckRow]:
    """Build the resolution and run shape, d^2, exactness and Happel checks up to ``max_degree``."""
    try:
        res = E6Resolution(s, char, mutation)
    except ResolutionError as exc:
        return [CheckRow("build", _failed_degree(str(exc)), False, str(exc))]
    rows = [CheckRow("build", None, True)]

    def shape(t: int) -> CheckRow:
        got = Counter(res.term(t))
        if got != expected_term(s, t):
            return CheckRow("terms", t, False, "summands differ from the closed formula")
        ncols, nrows = tables.SHAPES[t % 11]
        ok = len(res.term(t + 1)) == ncols * s and len(res.term(t)) == nrows * s
        return CheckRow("shape", t, ok, "" if ok else f"d_{t} is not {ncols}s x {nrows}s")

    def square(t: int) -> CheckRow:
        ok = res.check_square_zero(t)
        return CheckRow("d^2=0", t, ok, "" if ok else f"d_{t} d_{t + 1} != 0")

    def exact(t: int) -> CheckRow:
        ok = res.verify_exactness(t)
        return CheckRow("exactness", t + 1, ok, "" if ok else f"rank identity fails at Q_{t + 1}")

    degrees = range(max_degree + 1)
    rows += pmap(shape, degrees)
    ok = res.check_augmentation() and res.augmentation_exact()
    rows.append(CheckRow("augmentation", 0, ok, "" if ok else "mu d_0 != 0 or Q_0 -> A -> 0 not exact"))
    rows += pmap(square, range(max_degree))
    rows += pmap(exact, range(max_degree))
    if happel:
        top = min(max_degree, HAPPEL_MAX)
        rep = happel_check(s, char, res.term, top)
        rows.append(CheckRow("happel", top, rep.ok, "; ".join(rep.failures[:5])))
    return rows
