"""Exact scalar arithmetic over GF(p) and Q, plus sparse Gaussian elimination.

Vectors are sparse dicts ``{column: value}`` holding canonical field values
(ints in ``[0, p)`` for prime fields, :class:`fractions.Fraction` for Q).
Zero entries are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Vector = dict


class FieldError(ArithmeticError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p) (``p > 0``) or the rationals (``p == 0``)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not (_is_prime(self.p) and self.p < 2**31):
            raise FieldError(f"{self.p} is not a supported prime")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def of_characteristic(cls, char: int) -> "FieldSpec":
        return cls(char)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"

    # -- raw value arithmetic (no wrapper objects, used in hot loops) --

    def __call__(self, x) -> int | Fraction:
        if isinstance(x, str):
            x = Fraction(x)
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"division by zero in {self}")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_json(self, a) -> int | str:
        if self.p:
            return int(a)
        return str(a) if a.denominator != 1 else int(a.numerator)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; mixing fields is an error."""

    value: int | Fraction
    field: FieldSpec

    @classmethod
    def of(cls, x, field: FieldSpec) -> "Scalar":
        return cls(field(x), field)

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar) or other.field != self.field:
            raise FieldError(f"mixed-field operands: {self.field} vs {getattr(other, 'field', type(other))}")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other):
        self._check(other)
        return Scalar(self.field.div(self.value, other.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"{self.value}@{self.field}"


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    ops = {"add": Scalar.__add__, "sub": Scalar.__sub__, "mul": Scalar.__mul__, "div": Scalar.__truediv__}
    try:
        return ops[op](a, b)
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None


# ---------------------------------------------------------------------------
# sparse vectors


def vec_axpy(field: FieldSpec, y: dict, a, x: Mapping) -> None:
    """In place ``y += a * x``."""
    if not a:
        return
    p = field.p
    if p:
        for k, v in x.items():
            nv = (y.get(k, 0) + a * v) % p
            if nv:
                y[k] = nv
            else:
                y.pop(k, None)
    else:
        for k, v in x.items():
            nv = y.get(k, 0) + a * v
            if nv:
                y[k] = nv
            else:
                y.pop(k, None)


def vec_scale(field: FieldSpec, a, x: Mapping) -> dict:
    if not a:
        return {}
    return {k: field.mul(a, v) for k, v in x.items()}


def dense_to_sparse(field: FieldSpec, rows: Sequence[Sequence]) -> list[dict]:
    out = []
    for row in rows:
        d = {}
        for j, x in enumerate(row):
            v = field(x)
            if v:
                d[j] = v
        out.append(d)
    return out


def sparse_to_dense(field: FieldSpec, rows: Iterable[Mapping], ncols: int) -> list[list]:
    z = field.zero()
    out = []
    for r in rows:
        row = [z] * ncols
        for j, v in r.items():
            row[j] = v
        out.append(row)
    return out


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Pivot rows are kept fully reduced against each other, so reducing a
    vector needs a single pass over the pivot columns it touches.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict[object, dict] = {}  # pivot column -> row with pivot entry 1

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = dict(vec)
        rows = self.rows
        for c in [c for c in v if c in rows]:
            a = v.get(c)
            if a:
                vec_axpy(self.field, v, self.field.neg(a), rows[c])
        return v

    def __contains__(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping) -> object | None:
        """Insert ``vec``; return its new pivot column or ``None`` if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        f = self.field
        c = min(v, key=_sort_key)
        inv = f.inv(v[c])
        v = {k: f.mul(inv, x) for k, x in v.items()}
        for row in self.rows.values():
            a = row.get(c)
            if a:
                vec_axpy(f, row, f.neg(a), v)
        self.rows[c] = v
        return c

    def basis(self) -> list[dict]:
        return [self.rows[c] for c in sorted(self.rows, key=_sort_key)]

    def pivots(self) -> list:
        return sorted(self.rows, key=_sort_key)


def _sort_key(c):
    # columns are ints or tuples; compare within a single kind
    return c


def rank(field: FieldSpec, rows: Iterable[Mapping]) -> int:
    e = Echelon(field)
    for r in rows:
        e.add(r)
    return e.rank


def row_space(field: FieldSpec, rows: Iterable[Mapping]) -> list[dict]:
    e = Echelon(field)
    for r in rows:
        e.add(r)
    return e.basis()


def kernel(field: FieldSpec, rows: Sequence[Mapping], ncols: int) -> list[dict]:
    """Basis of ``{x : M x = 0}`` for the ``len(rows) x ncols`` matrix M, in RREF."""
    e = Echelon(field)
    for r in rows:
        e.add(r)
    pivots = set(e.rows)
    basis = Echelon(field)
    for free in range(ncols):
        if free in pivots:
            continue
        x = {free: field.one()}
        for c, row in e.rows.items():
            a = row.get(free)
            if a:
                x[c] = field.neg(a)
        basis.add(x)
    return basis.basis()


def transpose(rows: Sequence[Mapping]) -> dict:
    cols: dict = {}
    for i, r in enumerate(rows):
        for j, v in r.items():
            cols.setdefault(j, {})[i] = v
    return cols


class NoSolution(ArithmeticError):
    pass


class LinearSolver:
    """Solves ``A x = b`` repeatedly for a fixed sparse matrix A.

    ``A`` is given by columns: ``cols[j]`` is the sparse column j (keys are
    row labels).  Solutions set every free variable to zero, which makes
    them deterministic.
    """

    def __init__(self, field: FieldSpec, cols: Sequence[Mapping]):
        self.field = field
        self.ncols = len(cols)
        # row-reduce A^T-free: work on rows of [A | I] keyed by row label
        row_labels = sorted({r for c in cols for r in c}, key=repr)
        self.row_labels = row_labels
        index = {r: i for i, r in enumerate(row_labels)}
        rows: list[dict] = [{} for _ in row_labels]
        for j, c in enumerate(cols):
            for r, v in c.items():
                rows[index[r]][j] = v
        n = self.ncols
        self._index = index
        ech = Echelon(field)
        self._pivot_rows: list[tuple[int, dict]] = []
        self._null_rows: list[dict] = []
        for i, r in enumerate(rows):
            aug = dict(r)
            aug[n + i] = field.one()
            ech.add(aug)
        for c, row in ech.rows.items():
            tag = {k - n: v for k, v in row.items() if k >= n}
            if c < n:
                self._pivot_rows.append((c, tag))
            else:
                self._null_rows.append(tag)

    def solve(self, b: Mapping) -> dict:
        f = self.field
        index = self._index
        bv = {}
        for r, v in b.items():
            if r not in index:
                if v:
                    raise NoSolution(f"right-hand side has support outside the image ({r!r})")
                continue
            bv[index[r]] = v
        for tag in self._null_rows:
            if _dot(f, tag, bv):
                raise NoSolution("right-hand side is not in the image")
        x = {}
        for c, tag in self._pivot_rows:
            v = _dot(f, tag, bv)
            if v:
                x[c] = v
        return x


def _dot(field: FieldSpec, a: Mapping, b: Mapping):
    if len(a) > len(b):
        a, b = b, a
    s = field.zero()
    for k, v in a.items():
        w = b.get(k)
        if w:
            s = field.add(s, field.mul(v, w))
    return s


def matrix_rank(field: FieldSpec, dense: Sequence[Sequence]) -> int:
    """Rank of a dense matrix given as nested lists."""
    return rank(field, dense_to_sparse(field, dense))


def matrix_kernel(field: FieldSpec, dense: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Kernel basis of a dense matrix; pass ``ncols`` when there are no rows."""
    if ncols is None:
        ncols = len(dense[0]) if dense else 0
    return sparse_to_dense(field, kernel(field, dense_to_sparse(field, dense), ncols), ncols)


def matrix_row_space(field: FieldSpec, dense: Sequence[Sequence]) -> list[list]:
    ncols = len(dense[0]) if dense else 0
    return sparse_to_dense(field, row_space(field, dense_to_sparse(field, dense)), ncols)
