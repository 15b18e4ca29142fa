"""The periodic minimal bimodule resolution of the E6-type algebra.

The eleven base differentials come from :mod:`hhe6.e6.tables`; label paths
are turned into basis paths of the algebra, the terms ``Q_0 .. Q_11`` are
read off the entry typing, and every later differential is the base one with
``sigma^l`` applied to its left tensor factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ..bimodule import BimoduleComplex, BimoduleError, BimoduleMap
from ..pathalg import Algebra, AmbiguousPath, NoPath
from . import tables
from .quiver import (NILPOTENCY, e6_algebra, label_path_candidates, label_vertex, period, sigma_order,
                     sigma_power)


class ResolutionError(ValueError):
    pass


# Corrections to the printed entry tables.  Each item maps
# (degree r, predicate on (s, column j), entry position within the column)
# to a replacement; see ERRATA_NOTES for the reason each one is forced.
ERRATA: dict = {}
ERRATA_NOTES: dict = {}


@dataclass(frozen=True)
class Mutation:
    """A deliberate corruption used to check that the validators notice typos."""

    degree: int  # which base differential family d_r
    column: int = 0
    entry: int = 0

    def apply(self, entries: list, r: int, j: int) -> list:
        if r == self.degree and j == self.column and entries:
            e = entries[self.entry % len(entries)]
            return [x for x in entries if x is not e]
        return entries


def _resolve_segment(alg: Algebra, s: int, seg: tables.Seg) -> list[int]:
    if seg.trivial:
        return [alg.idempotents[label_vertex(seg.start, s)]]
    return label_path_candidates(alg, s, seg.start, seg.end)


def base_entries(s: int, r: int, j: int, mutation: Mutation | None = None) -> list[tables.Entry]:
    entries = list(tables.column_entries(r, s, j))
    for fix in ERRATA.get(r, ()):
        entries = fix(s, j, entries)
    if mutation is not None:
        entries = mutation.apply(entries, r, j)
    return entries


def build_base_differentials(alg: Algebra, s: int, mutation: Mutation | None = None) -> tuple[list, list]:
    """Terms ``Q_0 .. Q_11`` and maps ``d_0 .. d_10`` from the entry tables.

    Label paths of ambiguous length (only possible when ``s = 1``) are fixed
    by requiring every generator to have a single internal degree.
    """
    f = alg.field
    nv = 6 * s
    terms = [tuple((v, v) for v in range(nv))]
    degrees = [[0] * nv]
    maps = []
    for r in range(11):
        ncols, nrows = tables.SHAPES[r]
        ncols, nrows = ncols * s, nrows * s
        if len(terms[r]) != nrows:
            raise ResolutionError(f"d_{r} expects {nrows} rows but Q_{r} has {len(terms[r])} summands")
        dom, degs, cols = [], [], []
        for j in range(ncols):
            entries = base_entries(s, r, j, mutation)
            if not entries:
                raise ResolutionError(f"column {j} of d_{r} is empty")
            resolved = []
            col_vertex = None
            for e in entries:
                if not 0 <= e.row < nrows:
                    raise ResolutionError(f"d_{r} column {j}: row {e.row} out of range")
                ik, jk = terms[r][e.row]
                if label_vertex(e.left.start, s) != ik or label_vertex(e.right.end, s) != jk:
                    raise ResolutionError(f"d_{r} column {j}: entry does not start at row {e.row}'s summand")
                cv = (label_vertex(e.left.end, s), label_vertex(e.right.start, s))
                if col_vertex is None:
                    col_vertex = cv
                elif cv != col_vertex:
                    raise ResolutionError(f"d_{r} column {j}: entries disagree on the column summand")
                la = _resolve_segment(alg, s, e.left)
                lb = _resolve_segment(alg, s, e.right)
                if not la or not lb:
                    raise ResolutionError(f"d_{r} column {j}: entry in row {e.row} names a zero path")
                resolved.append((e, la, lb))
            # internal degree of the column generator
            options = None
            for e, la, lb in resolved:
                base = degrees[r][e.row]
                opts = {base + alg.basis[a].length + alg.basis[b].length for a in la for b in lb}
                options = opts if options is None else options & opts
            if not options or len(options) != 1:
                raise ResolutionError(f"d_{r} column {j}: entries are not homogeneous ({options})")
            deg = options.pop()
            choices = []
            for e, la, lb in resolved:
                base = degrees[r][e.row]
                pairs = [(a, b) for a in la for b in lb
                         if base + alg.basis[a].length + alg.basis[b].length == deg]
                choices.append((e, pairs))
            cols.append(choices)
            dom.append(col_vertex)
            degs.append(deg)
        d = _settle_choices(alg, r, tuple(dom), terms[r], cols, maps[-1] if maps else None)
        d.validate()
        maps.append(d)
        terms.append(tuple(dom))
        degrees.append(degs)
    return terms, maps


def _assemble(alg: Algebra, dom, cod, cols, picks) -> BimoduleMap:
    f = alg.field
    out = []
    for choices in cols:
        col: dict = {}
        for e, pairs in choices:
            a, b = pairs[0] if len(pairs) == 1 else picks[id(pairs)]
            acc = col.setdefault(e.row, {})
            nv = f.add(acc.get((a, b), f.zero()), f(e.coef))
            if nv:
                acc[(a, b)] = nv
            else:
                acc.pop((a, b), None)
        out.append({k: v for k, v in col.items() if v})
    return BimoduleMap(alg, dom, cod, out)


def _settle_choices(alg: Algebra, r: int, dom, cod, cols, previous: BimoduleMap | None) -> BimoduleMap:
    """Build ``d_r``, settling entries whose two factors could trade a length-4 cycle.

    Such entries only occur for ``s = 1``, where a label difference of 4 can
    mean a full cycle or no step at all.  Every reading is tried and the one
    compatible with the previous differential (``d_{r-1} d_r = 0``) is kept.
    """
    open_ = [pairs for choices in cols for _, pairs in choices if len(pairs) != 1]
    for pairs in open_:
        if not pairs:
            raise ResolutionError(f"d_{r}: an entry has no path of the column's degree")
    if not open_:
        return _assemble(alg, dom, cod, cols, {})
    if previous is None:
        raise ResolutionError(f"d_{r}: ambiguous entries with nothing to test against")
    survivors = []
    for combo in itertools.product(*open_):
        picks = {id(p): c for p, c in zip(open_, combo)}
        d = _assemble(alg, dom, cod, cols, picks)
        if previous.compose(d).is_zero():
            survivors.append(d)
    if len(survivors) != 1:
        raise ResolutionError(f"d_{r}: {len(survivors)} readings of the ambiguous entries satisfy d^2 = 0")
    return survivors[0]


class E6Resolution(BimoduleComplex):
    """The resolution for given ``s`` and characteristic, degrees ``>= 0``."""

    def __init__(self, s: int, char: int, mutation: Mutation | None = None):
        alg = e6_algebra(s, char)
        self.s, self.char = s, char
        self.mutation = mutation
        self.base_terms, self.base_maps = build_base_differentials(alg, s, mutation)
        self.order = sigma_order(s, char)
        self.period = 11 * self.order
        self._sigma = {}
        super().__init__(alg, self._make_term, self._make_diff)

    def sigma(self, power: int):
        power %= self.order
        if power not in self._sigma:
            self._sigma[power] = sigma_power(self.s, power)
        return self._sigma[power]

    def _make_term(self, t: int) -> tuple:
        ell, r = divmod(t, 11)
        sp = self.sigma(ell)
        return tuple((sp.vertex_map[i], j) for (i, j) in self.base_terms[r])

    def _make_diff(self, t: int) -> BimoduleMap:
        ell, r = divmod(t, 11)
        ell %= self.order
        if ell == 0:
            return self.base_maps[r]
        sp = self.sigma(ell)
        return self.base_maps[r].twisted_left(sp.vertex_map, sp.arrow_map)

    def term(self, t: int) -> tuple:
        return super().term(t % self.period)

    def differential(self, t: int) -> BimoduleMap:
        return super().differential(t % self.period)

    def cochain_basis(self, t: int) -> list:
        return super().cochain_basis(t % self.period)

    def cohomology(self, t: int):
        if t > self.period:
            t = (t - 1) % self.period + 1
        return super().cohomology(t)


@lru_cache(maxsize=None)
def e6_resolution(s: int, char: int) -> E6Resolution:
    return E6Resolution(s, char)


def term_summands_from_formula(s: int, t: int) -> list[tuple[int, int]]:
    """Summand labels of ``Q_t`` (``t <= 10``) computed from the closed formulas.

    The third family of even terms needs the factor 4 on its first index;
    without it the labels do not even have the right residue mod 4.
    """
    f, h = tables.f, tables.h
    m, odd = divmod(t, 2)
    out = []
    for r in range(s):
        if not odd:
            for i in range(f(m, 2) + 1):
                out.append((4 * (r + m) - 1 + h(m, 2) + i, 4 * r))
            for i in range(f(m, 3) + 1):
                for j in range(2):
                    out.append((4 * (r + m + j * s + f(m, 2) * s + f(m, 5) * s) + 2 - h(m, 3) + i * (4 * s + 1),
                                4 * (r + j * s) + 1))
            for i in range(f(m, 2) + 1):
                for j in range(2):
                    out.append((4 * (r + m + j * s + f(m, 1) * s + f(m, 4) * s + f(m, 5) * s) + 1 + h(m, 2)
                                + i * (4 * s + 1), 4 * (r + j * s) + 2))
            for i in range(f(m, 3) + 1):
                out.append((4 * (r + m + 1) - h(m, 3) + i, 4 * r + 3))
        else:
            for i in range(1 - f(m, 4) + 1):
                out.append((4 * (r + m) + 1 + h(m, 0) + 2 * f(m, 4) + 4 * s * i, 4 * r))
            for j in range(2):
                out.append((4 * (r + m + 1 + j * s) - h(m, 0) - 2 * f(m, 0), 4 * (r + j * s) + 1))
            for j in range(2):
                out.append((4 * (r + m + 1 + j * s + f(m, 4) * s) - h(m, 5) + 2 * f(m, 4), 4 * (r + j * s) + 2))
            for i in range(1 - f(m, 0) + 1):
                out.append((4 * (r + m + 1) + 1 + h(m, 5) - 2 * f(m, 0) + 4 * s * i, 4 * r + 3))
    return [(label_vertex(a, s), label_vertex(b, s)) for a, b in out]
