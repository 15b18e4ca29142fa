"""Finite-dimensional quotients of path algebras of quivers.

Conventions
-----------
Paths compose right to left: for arrows ``a: u -> v`` and ``b: v -> w`` the
product ``b * a`` is the path "first a, then b".  Internally a path is stored
as a :class:`PathWord` holding its arrows in traversal order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .field import Echelon, FieldSpec, vec_axpy


class QuiverError(ValueError):
    pass


class NoPath(LookupError):
    pass


class AmbiguousPath(LookupError):
    pass


@dataclass(frozen=True)
class ArrowLabel:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[ArrowLabel, ...]

    def __post_init__(self):
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise QuiverError(f"arrow {a.name} has an endpoint outside the vertex set")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow names")

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(name)


@dataclass(frozen=True)
class PathWord:
    """A path: ``arrows`` in traversal order; trivial paths carry only a vertex."""

    source: int
    target: int
    arrows: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def then(self, other: "PathWord") -> "PathWord | None":
        """Concatenate: walk ``self`` first, then ``other`` (i.e. ``other * self``)."""
        if self.target != other.source:
            return None
        return PathWord(self.source, other.target, self.arrows + other.arrows)


def trivial(v: int) -> PathWord:
    return PathWord(v, v, ())


def make_path(quiver: Quiver, arrows: Sequence[int]) -> PathWord:
    """Build a path from arrows listed in traversal order."""
    if not arrows:
        raise QuiverError("use trivial(v) for a length-zero path")
    cur = quiver.arrows[arrows[0]].source
    for a in arrows:
        if quiver.arrows[a].source != cur:
            raise QuiverError(f"arrows {list(arrows)} do not compose")
        cur = quiver.arrows[a].target
    return PathWord(quiver.arrows[arrows[0]].source, cur, tuple(arrows))


def all_paths(quiver: Quiver, max_len: int) -> list[PathWord]:
    """All paths of length ``< max_len`` (including trivial ones)."""
    out = [trivial(v) for v in range(quiver.n_vertices)]
    frontier = [p for p in out]
    outgoing: dict[int, list[int]] = {}
    for k, a in enumerate(quiver.arrows):
        outgoing.setdefault(a.source, []).append(k)
    for _ in range(1, max_len):
        nxt = []
        for p in frontier:
            for a in outgoing.get(p.target, ()):
                nxt.append(PathWord(p.source, quiver.arrows[a].target, p.arrows + (a,)))
        out.extend(nxt)
        frontier = nxt
    return out


Relation = Mapping[tuple, object]  # {arrow tuple (traversal order): coefficient}


class Algebra:
    """Quotient ``K Q / I`` with an explicit basis of paths.

    ``relations`` are linear combinations of parallel paths (arrow tuples in
    traversal order); every path of length ``>= nilpotency_bound`` is zero.
    The basis is computed by eliminating the two-sided ideal closure of the
    relations inside the span of all shorter paths.
    """

    def __init__(self, quiver: Quiver, field: FieldSpec, relations: Iterable[Relation], nilpotency_bound: int):
        self.quiver = quiver
        self.field = field
        self.N = nilpotency_bound
        paths = all_paths(quiver, nilpotency_bound)
        # column order: longer paths first so that they are eliminated first
        paths.sort(key=lambda p: (-p.length, p.source, p.arrows, p.target))
        self._path_id = {p: k for k, p in enumerate(paths)}
        self._paths = paths
        by_arrows = {}
        for p in paths:
            if p.arrows:
                by_arrows[p.arrows] = p
        ends_at: dict[int, list[PathWord]] = {}
        starts_at: dict[int, list[PathWord]] = {}
        for p in paths:
            ends_at.setdefault(p.target, []).append(p)
            starts_at.setdefault(p.source, []).append(p)

        ideal: dict[tuple[int, int], Echelon] = {}
        for rel in relations:
            terms = {}
            ends = set()
            for word, c in rel.items():
                c = field(c)
                if not c:
                    continue
                word = tuple(word)
                p = make_path(quiver, word)
                ends.add((p.source, p.target))
                terms[word] = c
            if not terms:
                continue
            if len(ends) != 1:
                raise QuiverError(f"relation {dict(rel)} mixes non-parallel paths")
            (x, y), = ends
            for v in ends_at[x]:
                for u in starts_at[y]:
                    vec = {}
                    for word, c in terms.items():
                        w = v.arrows + word + u.arrows
                        if len(w) >= nilpotency_bound:
                            continue
                        pid = self._path_id[by_arrows[w]]
                        vec_axpy(field, vec, c, {pid: field.one()})
                    if vec:
                        ideal.setdefault((v.source, u.target), Echelon(field)).add(vec)
        self._ideal = ideal
        for v in range(quiver.n_vertices):
            ech = ideal.get((v, v))
            if ech is not None and self._path_id[trivial(v)] in ech.rows:
                raise QuiverError(f"relations are not admissible: e_{v} lies in the ideal")

        basis = []
        for p in paths:
            ech = ideal.get((p.source, p.target))
            if ech is None or self._path_id[p] not in ech.rows:
                basis.append(p)
        basis.sort(key=lambda p: (p.source, p.target, p.length, p.arrows))
        self.basis: list[PathWord] = basis
        self.index = {p: k for k, p in enumerate(basis)}
        self._nf_cache: dict[PathWord, dict] = {}
        self._mul_cache: dict[tuple[int, int], dict] = {}
        self._corner: dict[tuple[int, int], list[int]] = {}
        for k, p in enumerate(basis):
            self._corner.setdefault((p.target, p.source), []).append(k)
        self.idempotents = [self.index[trivial(v)] for v in range(quiver.n_vertices)]

    # -- basics ------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def normal_form(self, p: PathWord) -> dict:
        """Express a path in the basis (sparse dict basis index -> coefficient)."""
        got = self._nf_cache.get(p)
        if got is not None:
            return got
        if p.length >= self.N:
            res = {}
        else:
            pid = self._path_id[p]
            ech = self._ideal.get((p.source, p.target))
            red = {pid: self.field.one()} if ech is None else ech.reduce({pid: self.field.one()})
            res = {self.index[self._paths[c]]: v for c, v in red.items()}
        self._nf_cache[p] = res
        return res

    def element(self, path: PathWord, coeff=1) -> dict:
        c = self.field(coeff)
        return {k: self.field.mul(c, v) for k, v in self.normal_form(path).items()} if c else {}

    def mul_basis(self, a: int, b: int) -> dict:
        """Product ``a * b`` of basis elements (first ``b``, then ``a``)."""
        key = (a, b)
        got = self._mul_cache.get(key)
        if got is None:
            w = self.basis[b].then(self.basis[a])
            got = {} if w is None else self.normal_form(w)
            self._mul_cache[key] = got
        return got

    def mul(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        f = self.field
        for a, ca in x.items():
            for b, cb in y.items():
                prod = self.mul_basis(a, b)
                if prod:
                    vec_axpy(f, out, f.mul(ca, cb), prod)
        return out

    def corner_basis(self, i: int, j: int) -> list[int]:
        """Basis indices of ``e_i A e_j``: paths from ``j`` to ``i``."""
        return self._corner.get((i, j), [])

    def left_basis(self, i: int) -> list[int]:
        """Basis of ``A e_i`` (paths starting at ``i``)."""
        return [k for k, p in enumerate(self.basis) if p.source == i]

    def right_basis(self, j: int) -> list[int]:
        """Basis of ``e_j A`` (paths ending at ``j``)."""
        return [k for k, p in enumerate(self.basis) if p.target == j]

    def paths_of_length(self, source: int, target: int, length: int) -> list[int]:
        return [k for k in self.corner_basis(target, source) if self.basis[k].length == length]

    def unique_path(self, source: int, target: int, length: int | None = None) -> int:
        """The unique basis path from ``source`` to ``target`` (optionally of a given length)."""
        cands = self.corner_basis(target, source)
        if length is not None:
            cands = [k for k in cands if self.basis[k].length == length]
        if not cands:
            raise NoPath(f"no nonzero path {source} -> {target}" + ("" if length is None else f" of length {length}"))
        if len(cands) > 1:
            raise AmbiguousPath(f"{len(cands)} independent paths {source} -> {target}")
        return cands[0]

    def center_dim(self) -> int:
        """Dimension of the centre, by solving ``x a = a x`` for generators ``a``."""
        from .field import kernel

        f = self.field
        gens = list(self.idempotents) + [k for k, p in enumerate(self.basis) if p.length == 1]
        rows: dict = {}
        for x in range(self.dim):
            for g in gens:
                comm = dict(self.mul_basis(x, g))
                vec_axpy(f, comm, f.neg(f.one()), self.mul_basis(g, x))
                for k, v in comm.items():
                    rows.setdefault((g, k), {})[x] = v
        return len(kernel(f, list(rows.values()), self.dim))

    # -- automorphisms -----------------------------------------------------
    def apply_automorphism(self, vertex_map: Sequence[int], arrow_map: Mapping[int, tuple[object, int]], x: Mapping) -> dict:
        """Apply the algebra map sending ``e_v -> e_{vertex_map[v]}`` and arrow ``a -> c * arrow``."""
        out: dict = {}
        f = self.field
        for k, coef in x.items():
            img = self.automorphism_image(vertex_map, arrow_map, k)
            vec_axpy(f, out, coef, img)
        return out

    def automorphism_image(self, vertex_map, arrow_map, k: int) -> dict:
        p = self.basis[k]
        f = self.field
        if not p.arrows:
            return {self.idempotents[vertex_map[p.source]]: f.one()}
        c = f.one()
        word = []
        for a in p.arrows:
            sc, b = arrow_map[a]
            arr, img = self.quiver.arrows[a], self.quiver.arrows[b]
            if vertex_map[arr.source] != img.source or vertex_map[arr.target] != img.target:
                raise QuiverError(f"arrow map is not compatible with vertex map at arrow {arr.name}")
            c = f.mul(c, f(sc))
            word.append(b)
        return self.element(make_path(self.quiver, word), c)

    # -- serialization -----------------------------------------------------
    def path_name(self, k: int) -> str:
        p = self.basis[k]
        if not p.arrows:
            return f"e{p.source}"
        return "*".join(self.quiver.arrows[a].name for a in reversed(p.arrows))


def quiver_to_json(quiver: Quiver, relations: Iterable[Relation], field: FieldSpec | None = None) -> dict:
    """JSON shape: vertices, arrows (name/source/target), relations as signed word lists."""
    rels = []
    for rel in relations:
        terms = []
        for word, c in sorted(rel.items()):
            c = field(c) if field else c
            terms.append({"coeff": field.to_json(c) if field else int(c), "word": [quiver.arrows[a].name for a in word]})
        rels.append(terms)
    return {
        "vertices": list(quiver.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in quiver.arrows],
        "relations": rels,
    }


def quiver_from_json(data: Mapping) -> tuple[Quiver, list[dict]]:
    if not isinstance(data, Mapping) or not {"vertices", "arrows", "relations"} <= set(data):
        raise QuiverError("quiver JSON needs 'vertices', 'arrows' and 'relations'")
    vertices = tuple(str(v) for v in data["vertices"])
    arrows = []
    for a in data["arrows"]:
        try:
            arrows.append(ArrowLabel(str(a["name"]), int(a["source"]), int(a["target"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise QuiverError(f"malformed arrow entry {a!r}") from exc
    quiver = Quiver(vertices, tuple(arrows))
    rels = []
    for rel in data["relations"]:
        d: dict = {}
        for term in rel:
            try:
                word = tuple(quiver.arrow_index(n) for n in term["word"])
            except KeyError as exc:
                raise QuiverError(f"unknown arrow in relation term {term!r}") from exc
            coeff = term.get("coeff", 1)
            d[word] = d.get(word, 0) + (int(coeff) if not isinstance(coeff, str) else coeff)
        rels.append(d)
    return quiver, rels


def load_quiver(path: str | Path) -> tuple[Quiver, list[dict]]:
    with open(path) as fh:
        return quiver_from_json(json.load(fh))
