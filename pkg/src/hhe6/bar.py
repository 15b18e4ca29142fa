"""Hochschild cohomology from the reduced bar complex.

Cochains of degree ``t`` are functions on vertex-composable words
``(a_1, ..., a_t)`` of radical basis paths, with ``f(a_1, ..., a_t)`` in
``e_{target(a_1)} A e_{source(a_t)}``.  The coboundary is the usual one::

    (df)(a_1..a_{t+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
                         + (-1)^{t+1} f(..a_t) a_{t+1}

This is independent of any bimodule resolution and serves as an oracle for
small degrees.  The complex splits by internal path degree (the relations
are homogeneous), which keeps every rank computation small.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .field import Echelon, vec_axpy
from .pathalg import Algebra

DEFAULT_T_MAX = 3
DEFAULT_LIMIT = 400_000


class OracleResourceError(RuntimeError):
    """The requested degree needs more cochains than the configured bound."""


@dataclass
class BarComplex:
    alg: Algebra
    t_max: int = DEFAULT_T_MAX
    limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        A = self.alg
        self.radical = [k for k, p in enumerate(A.basis) if p.length > 0]
        self._by_target: dict[int, list[int]] = {}
        for k in self.radical:
            self._by_target.setdefault(A.basis[k].target, []).append(k)
        # c -> [(a, b, coef)] with a*b = ... + coef*c + ...
        self._factor: dict[int, list] = {}
        for a in self.radical:
            for b in self._by_target.get(A.basis[a].source, ()):
                for c, v in A.mul_basis(a, b).items():
                    self._factor.setdefault(c, []).append((a, b, v))
        self._words: dict[int, list[tuple]] = {}
        self._ranks: dict[int, int] = {}

    def words(self, t: int) -> list[tuple]:
        """Composable radical words of length ``t`` (``a_i`` starts where ``a_{i-1}`` ends... reversed)."""
        got = self._words.get(t)
        if got is not None:
            return got
        A = self.alg
        if t == 0:
            got = [(v,) for v in range(A.quiver.n_vertices)]  # the empty word at each vertex
        elif t == 1:
            got = [(a,) for a in self.radical]
        else:
            got = []
            for w in self.words(t - 1):
                for b in self._by_target.get(A.basis[w[-1]].source, ()):
                    got.append(w + (b,))
        self._words[t] = got
        return got

    def _ends(self, t: int, w: tuple) -> tuple[int, int]:
        """``(target of a_1, source of a_t)``: the corner where ``f(w)`` lives."""
        A = self.alg
        if t == 0:
            return w[0], w[0]
        return A.basis[w[0]].target, A.basis[w[-1]].source

    def cochain_basis(self, t: int) -> list[tuple]:
        A = self.alg
        out = []
        for w in self.words(t):
            i, j = self._ends(t, w)
            for z in A.corner_basis(i, j):
                out.append((w, z))
        return out

    def cochain_dim(self, t: int) -> int:
        A = self.alg
        return sum(len(A.corner_basis(*self._ends(t, w))) for w in self.words(t))

    def _guard(self, t: int) -> None:
        if t > self.t_max:
            raise OracleResourceError(f"degree {t} exceeds t_max={self.t_max}")
        need = self.cochain_dim(t + 1) if t + 1 <= self.t_max + 1 else 0
        if need > self.limit:
            raise OracleResourceError(f"degree {t + 1} has {need} cochains (limit {self.limit})")

    def coboundary(self, t: int, w: tuple, z: int) -> dict:
        """Image under ``delta^t`` of the cochain with value ``z`` on ``w`` and zero elsewhere."""
        A, f = self.alg, self.alg.field
        out: dict = {}
        i, j = self._ends(t, w)
        one = f.one()
        # a_1 f(a_2 ..): prepend a with source i
        for a in self.radical:
            if A.basis[a].source != i:
                continue
            prod = A.mul_basis(a, z)
            if prod:
                key_w = (a,) if t == 0 else (a,) + w
                for p, c in prod.items():
                    vec_axpy(f, out, c, {(key_w, p): one})
        # f(a_1..a_t) a_{t+1}: append b with target j
        sign = one if (t + 1) % 2 == 0 else f.neg(one)
        for b in self._by_target.get(j, ()):
            prod = A.mul_basis(z, b)
            if prod:
                key_w = (b,) if t == 0 else w + (b,)
                for p, c in prod.items():
                    vec_axpy(f, out, f.mul(sign, c), {(key_w, p): one})
        # inner terms: split a_k into a product of two radical paths
        if t > 0:
            for k in range(t):
                sgn = one if (k + 1) % 2 == 0 else f.neg(one)
                for a, b, c in self._factor.get(w[k], ()):
                    key_w = w[:k] + (a, b) + w[k + 1:]
                    vec_axpy(f, out, f.mul(sgn, c), {(key_w, z): one})
        return out

    def _degree(self, t: int, w: tuple, z: int) -> int:
        A = self.alg
        inner = 0 if t == 0 else sum(A.basis[a].length for a in w)
        return A.basis[z].length - inner

    def rank(self, t: int) -> int:
        """Rank of ``delta^t``."""
        got = self._ranks.get(t)
        if got is None:
            self._guard(t)
            blocks: dict[int, Echelon] = {}
            for w, z in self.cochain_basis(t):
                img = self.coboundary(t, w, z)
                if img:
                    blocks.setdefault(self._degree(t, w, z), Echelon(self.alg.field)).add(img)
            got = sum(e.rank for e in blocks.values())
            self._ranks[t] = got
        return got

    def hh_dim(self, t: int) -> int:
        prev = self.rank(t - 1) if t > 0 else 0
        return self.cochain_dim(t) - self.rank(t) - prev


def bar_hh_dim(alg: Algebra, t: int, t_max: int = DEFAULT_T_MAX, limit: int = DEFAULT_LIMIT) -> int:
    """``dim HH^t(A)`` from the reduced bar complex."""
    if t > t_max:
        raise OracleResourceError(f"degree {t} exceeds t_max={t_max}")
    return BarComplex(alg, t_max, limit).hh_dim(t)
