"""Minimal projective resolutions of simple left modules.

A submodule of a free module ``F = sum_k A e_{v_k}`` is kept as a K-subspace
of ``F`` in coordinates ``(k, path)``, split by the target vertex of the
path (that is, by the idempotent acting on the left).  Each step computes
the top ``N / rad N``, covers it by indecomposable projectives and passes to
the kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Echelon, kernel, vec_axpy
from .pathalg import Algebra


@dataclass
class Submodule:
    free: tuple[int, ...]  # vertices v_k of the ambient free module
    parts: dict  # vertex -> list of basis vectors {(k, path): coef} of e_v N

    @property
    def dim(self) -> int:
        return sum(len(v) for v in self.parts.values())

    def support(self) -> dict[int, int]:
        return {v: len(b) for v, b in self.parts.items() if b}


def _arrow_elements(alg: Algebra) -> list[int]:
    return [k for k, p in enumerate(alg.basis) if p.length == 1]


def _left_mul(alg: Algebra, a: int, vec: dict) -> dict:
    f = alg.field
    out: dict = {}
    for (k, p), c in vec.items():
        for q, cq in alg.mul_basis(a, p).items():
            vec_axpy(f, out, c, {(k, q): cq})
    return out


def top(alg: Algebra, sub: Submodule) -> list[tuple[int, dict]]:
    """Generators of ``sub`` modulo its radical, as ``(vertex, element)`` pairs."""
    arrows = _arrow_elements(alg)
    rad: dict = {}
    for v, vecs in sub.parts.items():
        for x in vecs:
            for a in arrows:
                y = _left_mul(alg, a, x)
                if y:
                    tgt = alg.basis[a].target
                    rad.setdefault(tgt, Echelon(alg.field)).add(y)
    gens = []
    for v in sorted(sub.parts):
        ech = rad.get(v, Echelon(alg.field))
        for x in sub.parts[v]:
            if ech.add(x) is not None:
                gens.append((v, x))
    return gens


def cover_kernel(alg: Algebra, sub: Submodule, gens: list[tuple[int, dict]]) -> Submodule:
    """Kernel of the projective cover ``sum_q A e_{v_q} -> sub`` sending ``e_{v_q}`` to the q-th generator."""
    f = alg.field
    free = tuple(v for v, _ in gens)
    result: dict = {}
    for w in range(alg.quiver.n_vertices):
        # the part of the cover living at target w
        basis = [(q, p) for q, v in enumerate(free) for p in alg.corner_basis(w, v)]
        if not basis:
            continue
        rows: dict = {}
        for col, (q, p) in enumerate(basis):
            img: dict = {}
            for (k, y), c in gens[q][1].items():
                for z, cz in alg.mul_basis(p, y).items():
                    vec_axpy(f, img, c, {(k, z): cz})
            for key, c in img.items():
                rows.setdefault(key, {})[col] = c
        ker = kernel(f, [rows[k] for k in sorted(rows)], len(basis))
        if ker:
            result[w] = [{basis[i]: c for i, c in x.items()} for x in ker]
    return Submodule(free, result)


@dataclass
class SimpleResolution:
    vertex: int
    terms: list[list[int]]  # terms[m]: vertices of the indecomposable summands of P^m
    syzygies: list[Submodule]  # syzygies[m] = Omega^m(S), m >= 1; index 0 unused

    def multiplicity(self, m: int, i: int) -> int:
        """``dim Ext^m(S_vertex, S_i)``."""
        return self.terms[m].count(i)


def simple_resolution(alg: Algebra, j: int, depth: int) -> SimpleResolution:
    """Terms ``P^0 .. P^depth`` of the minimal projective resolution of ``S_j``."""
    terms = [[j]]
    # Omega^1 = rad(A e_j)
    first: dict = {}
    for p in alg.left_basis(j):
        if alg.basis[p].length:
            first.setdefault(alg.basis[p].target, []).append({(0, p): alg.field.one()})
    sub = Submodule((j,), first)
    syz = [None, sub]
    for _ in range(depth):
        gens = top(alg, sub)
        terms.append([v for v, _ in gens])
        sub = cover_kernel(alg, sub, gens)
        syz.append(sub)
    return SimpleResolution(j, terms, syz)


def is_simple_at(sub: Submodule, v: int) -> bool:
    return sub.support() == {v: 1}
