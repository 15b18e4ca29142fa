"""Maps between free bimodules, complexes of them, and their cohomology.

A free bimodule ``P_{i,j} = A e_i (x) e_j A`` is named by its
:data:`ProjectiveIndex` ``(i, j)``.  A direct sum is a sequence of them.
Elements are sparse dicts ``{(k, x, y): c}`` meaning ``c * x (x) y`` in the
``k``-th summand, with ``x`` a basis path of ``A e_{i_k}`` and ``y`` one of
``e_{j_k} A``.

A map ``F: sum_c P(c) -> sum_k P(k)`` stores, for every column ``c`` and row
``k``, the image of the generator ``e_{i_c} (x) e_{j_c}`` as a combination
``{(a, b): coef}`` with ``a in e_{i_c} A e_{i_k}`` and ``b in e_{j_k} A e_{j_c}``.
Then ``F(x (x) y) = sum coef * (x a) (x) (b y)``.

Everything splits over corners ``e_u (-) e_v``, which keeps ranks small.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Mapping, Sequence

from .field import Echelon, FieldSpec, LinearSolver, NoSolution, kernel, vec_axpy
from .pathalg import Algebra

ProjectiveIndex = tuple  # (i, j)


class BimoduleError(ValueError):
    pass


@dataclass
class BimoduleMap:
    alg: Algebra
    domain: tuple
    codomain: tuple
    cols: list  # cols[c] = {k: {(a, b): coef}}

    def __post_init__(self):
        if len(self.cols) != len(self.domain):
            raise BimoduleError("column count does not match the domain")

    @property
    def shape(self) -> tuple[int, int]:
        """(number of columns, number of rows)."""
        return len(self.domain), len(self.codomain)

    def validate(self) -> None:
        """Check every entry lies in the corner its row and column demand."""
        A = self.alg
        for c, col in enumerate(self.cols):
            ic, jc = self.domain[c]
            for k, ent in col.items():
                if not 0 <= k < len(self.codomain):
                    raise BimoduleError(f"row {k} out of range in column {c}")
                ik, jk = self.codomain[k]
                for (a, b), v in ent.items():
                    pa, pb = A.basis[a], A.basis[b]
                    if (pa.source, pa.target) != (ik, ic) or (pb.source, pb.target) != (jc, jk):
                        raise BimoduleError(f"entry ({k},{c}) has a factor in the wrong corner")

    def apply_generator(self, c: int, x: int, y: int) -> dict:
        A, f = self.alg, self.alg.field
        out: dict = {}
        for k, ent in self.cols[c].items():
            for (a, b), v in ent.items():
                xa = A.mul_basis(x, a)
                if not xa:
                    continue
                by = A.mul_basis(b, y)
                if not by:
                    continue
                for p, cp in xa.items():
                    for q, cq in by.items():
                        key = (k, p, q)
                        nv = f.add(out.get(key, f.zero()), f.mul(v, f.mul(cp, cq)))
                        if nv:
                            out[key] = nv
                        else:
                            out.pop(key, None)
        return out

    def apply(self, elem: Mapping) -> dict:
        f = self.alg.field
        out: dict = {}
        for (c, x, y), v in elem.items():
            vec_axpy(f, out, v, self.apply_generator(c, x, y))
        return out

    def compose(self, g: "BimoduleMap") -> "BimoduleMap":
        """``self o g``."""
        if tuple(g.codomain) != tuple(self.domain):
            raise BimoduleError("composition of incompatible maps")
        A, f = self.alg, self.alg.field
        cols = []
        for gcol in g.cols:
            new: dict = {}
            for m, gent in gcol.items():
                for k, fent in self.cols[m].items():
                    acc = new.setdefault(k, {})
                    for (ag, bg), vg in gent.items():
                        for (af, bf), vf in fent.items():
                            left = A.mul_basis(ag, af)
                            if not left:
                                continue
                            right = A.mul_basis(bf, bg)
                            if not right:
                                continue
                            c0 = f.mul(vg, vf)
                            for p, cp in left.items():
                                for q, cq in right.items():
                                    key = (p, q)
                                    nv = f.add(acc.get(key, f.zero()), f.mul(c0, f.mul(cp, cq)))
                                    if nv:
                                        acc[key] = nv
                                    else:
                                        acc.pop(key, None)
            cols.append({k: e for k, e in new.items() if e})
        return BimoduleMap(A, g.domain, self.codomain, cols)

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def corners(self) -> set:
        """Corners ``(u, v)`` on which the domain is nonzero."""
        A = self.alg
        out = set()
        for (i, j) in self.domain:
            for u in range(A.quiver.n_vertices):
                if A.corner_basis(u, i):
                    for v in range(A.quiver.n_vertices):
                        if A.corner_basis(j, v):
                            out.add((u, v))
        return out

    def corner_columns(self, u: int, v: int) -> tuple[list, list[dict]]:
        """Domain basis of corner ``(u, v)`` and the images of its elements."""
        basis = sum_corner_basis(self.alg, self.domain, u, v)
        return basis, [self.apply_generator(c, x, y) for (c, x, y) in basis]

    def rank(self) -> int:
        total = 0
        for (u, v) in sorted(self.corners()):
            _, imgs = self.corner_columns(u, v)
            e = Echelon(self.alg.field)
            for img in imgs:
                e.add(img)
            total += e.rank
        return total

    def underlying_matrix(self) -> tuple[list, list, list[dict]]:
        """The K-linear map as sparse columns over explicit domain/codomain bases."""
        dom = sum_basis(self.alg, self.domain)
        cod = sum_basis(self.alg, self.codomain)
        return dom, cod, [self.apply_generator(c, x, y) for (c, x, y) in dom]

    def twisted_left(self, vertex_map: Sequence[int], arrow_map: Mapping) -> "BimoduleMap":
        """Apply an automorphism to every left tensor factor (and left vertex)."""
        A, f = self.alg, self.alg.field
        dom = tuple((vertex_map[i], j) for (i, j) in self.domain)
        cod = tuple((vertex_map[i], j) for (i, j) in self.codomain)
        cols = []
        for col in self.cols:
            new = {}
            for k, ent in col.items():
                acc: dict = {}
                for (a, b), v in ent.items():
                    for p, cp in A.automorphism_image(vertex_map, arrow_map, a).items():
                        key = (p, b)
                        nv = f.add(acc.get(key, f.zero()), f.mul(v, cp))
                        if nv:
                            acc[key] = nv
                        else:
                            acc.pop(key, None)
                if acc:
                    new[k] = acc
            cols.append(new)
        return BimoduleMap(A, dom, cod, cols)

    def to_json(self) -> dict:
        A, f = self.alg, self.alg.field
        entries = []
        for c, col in enumerate(self.cols):
            for k in sorted(col):
                for (a, b), v in sorted(col[k].items()):
                    entries.append({"row": k, "col": c, "coeff": f.to_json(v),
                                    "left": A.path_name(a), "right": A.path_name(b)})
        return {"domain": [list(p) for p in self.domain], "codomain": [list(p) for p in self.codomain],
                "entries": entries}


def sum_corner_basis(alg: Algebra, summands: Sequence, u: int, v: int) -> list:
    out = []
    for k, (i, j) in enumerate(summands):
        xs = alg.corner_basis(u, i)
        if not xs:
            continue
        ys = alg.corner_basis(j, v)
        for x in xs:
            for y in ys:
                out.append((k, x, y))
    return out


def sum_basis(alg: Algebra, summands: Sequence) -> list:
    out = []
    for k, (i, j) in enumerate(summands):
        for x in alg.left_basis(i):
            for y in alg.right_basis(j):
                out.append((k, x, y))
    return out


def sum_dim(alg: Algebra, summands: Sequence) -> int:
    return sum(len(alg.left_basis(i)) * len(alg.right_basis(j)) for (i, j) in summands)


def multiplication_image(alg: Algebra, summands: Sequence, elem: Mapping) -> dict:
    """The augmentation ``x (x) y -> x y`` applied to an element of a sum of ``P_{i,j}``."""
    f = alg.field
    out: dict = {}
    for (k, x, y), v in elem.items():
        vec_axpy(f, out, v, alg.mul_basis(x, y))
    return out


# ---------------------------------------------------------------------------
# complexes


class BimoduleComplex:
    """A (possibly infinite) complex ``... -> Q_{t+1} --d_t--> Q_t -> ... -> Q_0``.

    ``term(t)`` returns the summand list of ``Q_t`` and ``differential(t)``
    the map ``d_t: Q_{t+1} -> Q_t``; both are produced by callables and
    cached.
    """

    def __init__(self, alg: Algebra, term: Callable[[int], tuple], differential: Callable[[int], BimoduleMap]):
        self.alg = alg
        self._term = term
        self._diff = differential
        self._terms: dict = {}
        self._diffs: dict = {}
        self._cochains: dict = {}
        self._solvers: dict = {}
        self._cohom: dict = {}

    @property
    def field(self) -> FieldSpec:
        return self.alg.field

    def term(self, t: int) -> tuple:
        if t not in self._terms:
            self._terms[t] = tuple(self._term(t))
        return self._terms[t]

    def differential(self, t: int) -> BimoduleMap:
        if t not in self._diffs:
            d = self._diff(t)
            if tuple(d.domain) != self.term(t + 1) or tuple(d.codomain) != self.term(t):
                raise BimoduleError(f"d_{t} does not match the terms Q_{t + 1} -> Q_{t}")
            self._diffs[t] = d
        return self._diffs[t]

    # -- validators ------------------------------------------------------
    def check_square_zero(self, t: int) -> bool:
        """``d_t o d_{t+1} == 0``."""
        return self.differential(t).compose(self.differential(t + 1)).is_zero()

    def check_augmentation(self) -> bool:
        """``mu o d_0 == 0`` where ``mu`` is multiplication."""
        A, d0 = self.alg, self.differential(0)
        q0 = self.term(0)
        for c in range(len(d0.domain)):
            i, j = d0.domain[c]
            img = d0.apply_generator(c, A.idempotents[i], A.idempotents[j])
            if multiplication_image(A, q0, img):
                return False
        return True

    def verify_exactness(self, t: int) -> bool:
        """Exactness at ``Q_{t+1}``: ``rank d_t + rank d_{t+1} == dim Q_{t+1}``."""
        return self.differential(t).rank() + self.differential(t + 1).rank() == sum_dim(self.alg, self.term(t + 1))

    def augmentation_exact(self) -> bool:
        """Exactness at ``Q_0`` and surjectivity of the multiplication map."""
        A = self.alg
        dim_q0 = sum_dim(A, self.term(0))
        # multiplication is onto A since every e_i (x) e_i summand is present
        rank_mu = 0
        for (u, v) in sorted(self.differential(0).corners() | {(x, y) for x in range(A.quiver.n_vertices)
                                                               for y in range(A.quiver.n_vertices)}):
            basis = sum_corner_basis(A, self.term(0), u, v)
            e = Echelon(A.field)
            for (k, x, y) in basis:
                e.add(A.mul_basis(x, y))
            rank_mu += e.rank
        return rank_mu == A.dim and rank_mu + self.differential(0).rank() == dim_q0

    # -- cochains --------------------------------------------------------
    def cochain_basis(self, t: int) -> list:
        """Basis ``(k, z)`` of ``Hom(Q_t, A) = sum_k e_{i_k} A e_{j_k}``."""
        got = self._cochains.get(t)
        if got is None:
            got = [(k, z) for k, (i, j) in enumerate(self.term(t)) for z in self.alg.corner_basis(i, j)]
            self._cochains[t] = got
        return got

    def coboundary_of(self, t: int, cochain: Mapping) -> dict:
        """``delta^t(phi) = phi o d_t`` for ``phi`` given as ``{(k, z): c}``."""
        A, f = self.alg, self.field
        d = self.differential(t)
        by_row: dict = {}
        for (k, z), v in cochain.items():
            by_row.setdefault(k, []).append((z, v))
        out: dict = {}
        for c, col in enumerate(d.cols):
            acc: dict = {}
            for k, ent in col.items():
                for z, v in by_row.get(k, ()):
                    for (a, b), w in ent.items():
                        az = A.mul_basis(a, z)
                        for p, cp in az.items():
                            pb = A.mul_basis(p, b)
                            if pb:
                                vec_axpy(f, acc, f.mul(f.mul(v, w), cp), pb)
            for z, v in acc.items():
                out[(c, z)] = v
        return out

    def coboundary_columns(self, t: int) -> list[dict]:
        return [self.coboundary_of(t, {b: self.field.one()}) for b in self.cochain_basis(t)]

    def cohomology(self, t: int) -> "CohomologyDegree":
        got = self._cohom.get(t)
        if got is None:
            got = CohomologyDegree(self, t)
            self._cohom[t] = got
        return got

    def hh_dim(self, t: int) -> int:
        return self.cohomology(t).dim

    # -- lifting and products --------------------------------------------
    def _corner_solver(self, k: int, i: int, j: int):
        """Solver for ``d_{k-1}`` on corner ``(i, j)`` of ``Q_k`` (``k = 0``: multiplication map)."""
        key = (k, i, j)
        got = self._solvers.get(key)
        if got is None:
            A = self.alg
            basis = sum_corner_basis(A, self.term(k), i, j)
            if k == 0:
                imgs = [A.mul_basis(x, y) for (_, x, y) in basis]
            else:
                d = self.differential(k - 1)
                imgs = [d.apply_generator(c, x, y) for (c, x, y) in basis]
            got = (basis, LinearSolver(A.field, imgs))
            self._solvers[key] = got
        return got

    def lift_cocycle(self, t: int, cochain: Mapping, depth: int) -> list[dict]:
        """Chain maps ``phi_k: Q_{t+k} -> Q_k`` (``k <= depth``) over the cocycle.

        ``phi_k[c]`` is the image of the ``c``-th generator of ``Q_{t+k}``,
        an element of ``Q_k`` in the corner of that generator.
        """
        A, f = self.alg, self.field
        by_k: dict = {}
        for (k, z), v in cochain.items():
            by_k.setdefault(k, {})[z] = v
        phis: list[dict] = []
        cur = {}
        for c, (i, j) in enumerate(self.term(t)):
            target = by_k.get(c, {})
            cur[c] = self._solve(0, i, j, target)
        phis.append(cur)
        for k in range(1, depth + 1):
            d = self.differential(t + k - 1)
            prev = phis[-1]
            cur = {}
            for c, (i, j) in enumerate(self.term(t + k)):
                rhs: dict = {}
                for m, ent in d.cols[c].items():
                    img = prev.get(m)
                    if not img:
                        continue
                    for (a, b), w in ent.items():
                        for (n, x, y), v in img.items():
                            ax = A.mul_basis(a, x)
                            if not ax:
                                continue
                            yb = A.mul_basis(y, b)
                            if not yb:
                                continue
                            c0 = f.mul(w, v)
                            for p, cp in ax.items():
                                for q, cq in yb.items():
                                    key = (n, p, q)
                                    nv = f.add(rhs.get(key, f.zero()), f.mul(c0, f.mul(cp, cq)))
                                    if nv:
                                        rhs[key] = nv
                                    else:
                                        rhs.pop(key, None)
                cur[c] = self._solve(k, i, j, rhs)
            phis.append(cur)
        return phis

    def _solve(self, k: int, i: int, j: int, rhs: Mapping) -> dict:
        if not rhs:
            return {}
        basis, solver = self._corner_solver(k, i, j)
        try:
            x = solver.solve(rhs)
        except NoSolution as exc:
            raise BimoduleError(f"lifting failed at Q_{k}: not a cocycle or complex not exact") from exc
        return {basis[idx]: v for idx, v in x.items()}

    def cup_product(self, t2: int, f2: Mapping, t1: int, f1: Mapping) -> dict:
        """Cochain representing ``cl(f2) . cl(f1)``: ``f2`` composed with the ``t2``-th lift of ``f1``."""
        A, f = self.alg, self.field
        phis = self.lift_cocycle(t1, f1, t2)
        phi = phis[t2]
        by_k: dict = {}
        for (k, z), v in f2.items():
            by_k.setdefault(k, []).append((z, v))
        out: dict = {}
        for c, img in phi.items():
            acc: dict = {}
            for (n, x, y), v in img.items():
                for z, w in by_k.get(n, ()):
                    xz = A.mul_basis(x, z)
                    for p, cp in xz.items():
                        pz = A.mul_basis(p, y)
                        if pz:
                            vec_axpy(f, acc, f.mul(f.mul(v, w), cp), pz)
            for z, v in acc.items():
                out[(c, z)] = v
        return out


class CohomologyDegree:
    """Kernel, image and a chosen complement in cochain degree ``t``."""

    def __init__(self, cx: BimoduleComplex, t: int):
        self.cx, self.t = cx, t
        f = cx.field
        self.basis = cx.cochain_basis(t)
        self.index = {b: n for n, b in enumerate(self.basis)}
        n = len(self.basis)
        # delta^t as rows over the domain coordinates
        cols = cx.coboundary_columns(t)
        rows: dict = {}
        for col_idx, img in enumerate(cols):
            for key, v in img.items():
                rows.setdefault(key, {})[col_idx] = v
        self.kernel = kernel(f, list(rows.values()), n)
        self.image = Echelon(f)
        if t > 0:
            for img in cx.coboundary_columns(t - 1):
                self.image.add({self.index[key]: v for key, v in img.items()})
        comp = Echelon(f)
        for z in self.kernel:
            r = self.image.reduce(z)
            if r:
                comp.add(r)
        self.complement = comp
        self.class_pivots = comp.pivots()

    @property
    def dim(self) -> int:
        return len(self.kernel) - self.image.rank

    @property
    def cochain_dim(self) -> int:
        return len(self.basis)

    @property
    def image_dim(self) -> int:
        """Rank of ``delta^{t-1}``."""
        return self.image.rank

    def coordinates(self, cochain: Mapping) -> dict:
        return {self.index[k]: v for k, v in cochain.items() if v}

    def is_cocycle(self, cochain: Mapping) -> bool:
        return not self.cx.coboundary_of(self.t, cochain)

    def class_vector(self, cochain: Mapping) -> tuple:
        """Coordinates of the cohomology class in the chosen complement basis."""
        rem = self.image.reduce(self.coordinates(cochain))
        f = self.cx.field
        # rem is reduced modulo the image; read it off in the complement basis
        coords = []
        for p in self.class_pivots:
            a = rem.get(p, f.zero())
            coords.append(a)
            if a:
                vec_axpy(f, rem, f.neg(a), self.complement.rows[p])
        if rem:
            raise BimoduleError(f"cochain in degree {self.t} is not a cocycle")
        return tuple(coords)

    def is_coboundary(self, cochain: Mapping) -> bool:
        return not self.image.reduce(self.coordinates(cochain))


def compose_chain(maps: Iterable[BimoduleMap]) -> BimoduleMap:
    maps = list(maps)
    out = maps[0]
    for m in maps[1:]:
        out = out.compose(m)
    return out
