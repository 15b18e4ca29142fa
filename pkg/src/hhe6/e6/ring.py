"""Products of generator classes and the ring presentation they should satisfy.

A product ``X^(a) X^(b)`` is computed as ``cl(Y_a o Omega^{t_a}(Y_b))``.
Its expected value is a multiple of the class of some ``Y^(c)`` in degree
``(t_a + t_b) mod M``; products reaching past the period carry the factor
``T``, which on the periodic resolution is the identity chain map shifted
by ``M``, so ``T Y`` is represented by the matrix of ``Y`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..field import Echelon
from .generators import GeneratorCocycle, admissible, generator_list, instantiate_generator


@dataclass(frozen=True)
class Rhs:
    """``coef * s^s_power * X~^(family)``; ``family=None`` means zero."""

    family: int | None
    coef: int = 1
    s_power: int = 0

    def scalar(self, s: int) -> int:
        return self.coef * s ** self.s_power


ZERO = Rhs(None)


def X(family: int, coef: int = 1, s_power: int = 0) -> Rhs:
    return Rhs(family, coef, s_power)


def _branch(char: int, want: int, rhs: Rhs) -> Rhs:
    return rhs if char == want else ZERO


# (r1)..(r7): functions of the characteristic
NUMBERED: dict[int, Callable[[int], Rhs]] = {
    1: lambda c: _branch(c, 2, X(8)),
    2: lambda c: _branch(c, 3, X(14, -1, 1)),
    3: lambda c: _branch(c, 2, X(16)),
    4: lambda c: _branch(c, 3, X(2, -1, 1)),
    5: lambda c: _branch(c, 2, X(8)),
    6: lambda c: _branch(c, 3, X(12, 1, 1)),
    7: lambda c: _branch(c, 3, X(14, 1, 1)),
}


def _table_entries() -> dict[tuple[int, int], object]:
    """Products listed in the three tables; ints name a numbered relation."""
    z = ZERO
    t: dict[tuple[int, int], object] = {}
    cols1 = [1, 2, 4, 6, 7, 8, 9, 11]
    cols2 = [12, 13, 14, 15, 16, 18, 20, 22]
    for j in cols1 + cols2:
        t[(1, j)] = X(j)
    rows1 = {
        2: [None, z, z, z, z, z, X(10, -1), z],
        4: [None, None, z, 1, X(10, -1), z, X(11), z],
        6: [None, None, None, 2, z, z, X(17, 1, 1), z],
        7: [None, None, None, None, z, z, z, z],
        8: [None] * 5 + [z, z, z],
        9: [None] * 6 + [z, z],
        11: [None] * 7 + [z],
    }
    rows2 = {
        2: [z, z, z, X(14), z, z, z, X(21, -1)],
        4: [X(14), X(17), z, 3, z, X(20), z, z],
        6: [z, X(19), z, X(20, -1), z, 4, z, X(5, 1, 1)],
        7: [z, z, z, X(19), X(21), z, z, z],
        8: [z, X(21), z, z, z, z, z, z],
        9: [X(19), z, X(21), X(22, -1), z, X(3, 1, 1), X(5, 1, 1), z],
        11: [X(21), z, z, z, z, X(5, 1, 1), z, z],
    }
    rows3 = {
        12: [z, z, z, X(2, -1), z, z, z, X(10, -1)],
        13: [None, z, z, X(3), X(5), X(7), X(10), z],
        14: [None, None, z, z, z, z, z, z],
        15: [None, None, None, X(4, -1), z, X(6), 5, X(11)],
        16: [None] * 4 + [z, X(8), z, z],
        18: [None] * 5 + [6, 7, X(17, -1, 1)],
        20: [None] * 6 + [z, z],
        22: [None] * 7 + [z],
    }
    for rows, cols in ((rows1, cols1), (rows2, cols2), (rows3, cols2)):
        for a, vals in rows.items():
            for b, v in zip(cols, vals):
                if v is not None:
                    t[(a, b)] = v
    return t


TABLES = _table_entries()

X3_ZERO = (2, 3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 19, 21)
X3_NONZERO = {1: 3, 4: 5, 6: 10, 15: 17, 18: 19, 20: 21}
# the printed zero list names X^(3)X^(21) twice; X^(3)X^(22) is checked as the likely intent
X3_EXTRA = (22,)


@dataclass(frozen=True)
class Relation:
    """``X^(a) X^(b) = rhs``; ``rhs`` may depend on the characteristic and degrees."""

    name: str
    a: int
    b: int
    rhs: Callable[[int, int, int, int], Rhs]  # (s, char, t_a, t_b) -> Rhs


def relation_set(s: int) -> list[Relation]:
    rels: list[Relation] = []
    for b in X3_ZERO:
        rels.append(Relation("X3-zero", 3, b, lambda s_, c, ta, tb: ZERO))
    for b in X3_EXTRA:
        rels.append(Relation("X3-zero-dup", 3, b, lambda s_, c, ta, tb: ZERO))
    for b, target in X3_NONZERO.items():
        rels.append(Relation("X3", 3, b, lambda s_, c, ta, tb, _t=target: X(_t)))
    for (a, b), v in sorted(TABLES.items()):
        if isinstance(v, int):
            rels.append(Relation(f"r{v}", a, b, lambda s_, c, ta, tb, _k=v: NUMBERED[_k](c)))
        else:
            name = "X1-identity" if a == 1 else "table"
            rels.append(Relation(name, a, b, lambda s_, c, ta, tb, _v=v: _v))
    if s == 1:
        rels += s1_extras()
    return rels


def s1_extras() -> list[Relation]:
    rels = [
        Relation("s1", 1, 23, lambda s, c, ta, tb: X(23) if ta == 0 else ZERO),
        Relation("s1", 1, 24, lambda s, c, ta, tb: X(24) if ta == 0 else (X(2) if c == 3 else ZERO)),
        Relation("s1", 9, 24, lambda s, c, ta, tb: X(10, -1)),
        Relation("s1", 15, 24, lambda s, c, ta, tb: X(14) if c == 3 else ZERO),
        Relation("s1", 22, 24, lambda s, c, ta, tb: X(21, -1)),
    ]
    for j in range(2, 25):
        if j in (9, 15, 22):
            continue
        for i in (23, 24):
            rels.append(Relation("s1-zero", j, i, lambda s, c, ta, tb: ZERO))
    return rels


# ---------------------------------------------------------------------------
# computation


@dataclass
class ProductCheck:
    relation: str
    a: tuple[int, int]
    b: tuple[int, int]
    degree: int
    expected: Rhs
    expected_present: bool
    computed: tuple
    expected_vector: tuple
    exact: bool
    up_to_unit: bool

    def to_json(self, field) -> dict:
        return {
            "relation": self.relation,
            "lhs": [list(self.a), list(self.b)],
            "degree": self.degree,
            "expected": None if self.expected.family is None or not self.expected_present else
            {"family": self.expected.family, "coef": self.expected.coef, "s_power": self.expected.s_power},
            "computed_class": [field.to_json(x) for x in self.computed],
            "expected_class": [field.to_json(x) for x in self.expected_vector],
            "pass": self.exact,
            "pass_up_to_unit": self.up_to_unit,
        }


class RingContext:
    """Generators, their lifts and products on one resolution."""

    def __init__(self, res):
        self.res = res
        self.s, self.char, self.M = res.s, res.char, res.period
        self.field = res.field
        self._gens: dict = {}
        self._lifts: dict = {}

    def generators(self) -> tuple[tuple[int, int], ...]:
        return generator_list(self.s, self.char)

    def degrees(self, i: int) -> list[int]:
        return [t for (j, t) in self.generators() if j == i]

    def generator(self, i: int, t: int) -> GeneratorCocycle:
        key = (i, t)
        if key not in self._gens:
            self._gens[key] = instantiate_generator(self.res, i, t)
        return self._gens[key]

    def class_of(self, cochain: dict, degree: int) -> tuple:
        return self.res.cohomology(degree).class_vector(cochain)

    def generator_class(self, i: int, t: int, degree: int | None = None) -> tuple:
        """Class of ``Y^(i)_t`` (times ``T^k`` when ``degree = t + k M``)."""
        return self.class_of(self.generator(i, t).cochain, t if degree is None else degree)

    def lift(self, i: int, t: int, depth: int) -> list:
        key = (i, t)
        got = self._lifts.get(key)
        if got is None or len(got) <= depth:
            got = self.res.lift_cocycle(t, self.generator(i, t).cochain, max(depth, self.M))
            self._lifts[key] = got
        return got

    def product_cochain(self, a: tuple[int, int], b: tuple[int, int]) -> dict:
        """Cochain of ``cl(Y_a) cl(Y_b)`` in degree ``t_a + t_b``."""
        (ia, ta), (ib, tb) = a, b
        phi = self.lift(ib, tb, ta)[ta]
        return compose_cochain(self.res, self.generator(ia, ta).cochain, phi)

    def product_class(self, a, b) -> tuple:
        return self.class_of(self.product_cochain(a, b), a[1] + b[1])

    def expected_vector(self, rhs: Rhs, degree: int) -> tuple[tuple, bool]:
        """Class vector of ``rhs`` in ``degree``; ``present`` is False when the target generator is absent."""
        dim = self.res.cohomology(degree).dim
        zero = tuple(self.field.zero() for _ in range(dim))
        if rhs.family is None:
            return zero, True
        base = degree % self.M
        if degree >= self.M and base == 0:
            base = 0
        if not admissible(rhs.family, self.s, self.char, base, self.M):
            return zero, False
        vec = self.generator_class(rhs.family, base, degree)
        c = self.field(rhs.scalar(self.s))
        return tuple(self.field.mul(c, x) for x in vec), True

    def check(self, rel: Relation, ta: int, tb: int) -> ProductCheck:
        rhs = rel.rhs(self.s, self.char, ta, tb)
        degree = ta + tb
        computed = self.product_class((rel.a, ta), (rel.b, tb))
        expected, present = self.expected_vector(rhs, degree)
        return ProductCheck(rel.name, (rel.a, ta), (rel.b, tb), degree, rhs, present, computed, expected,
                            computed == expected, proportional(self.field, computed, expected))

    def verify_relations(self) -> list[ProductCheck]:
        out = []
        for rel in relation_set(self.s):
            for ta in self.degrees(rel.a):
                for tb in self.degrees(rel.b):
                    out.append(self.check(rel, ta, tb))
        return out


def compose_cochain(res, cochain: dict, phi: dict) -> dict:
    """``cochain o phi`` where ``phi`` sends generators of some ``Q_u`` into ``Q_t``."""
    A, f = res.alg, res.field
    from ..field import vec_axpy

    by_k: dict = {}
    for (k, z), v in cochain.items():
        by_k.setdefault(k, []).append((z, v))
    out: dict = {}
    for c, img in phi.items():
        acc: dict = {}
        for (n, x, y), v in img.items():
            for z, w in by_k.get(n, ()):
                for p, cp in A.mul_basis(x, z).items():
                    pz = A.mul_basis(p, y)
                    if pz:
                        vec_axpy(f, acc, f.mul(f.mul(v, w), cp), pz)
        for z, v in acc.items():
            if v:
                out[(c, z)] = v
    return out


def proportional(field, u: tuple, v: tuple) -> bool:
    """``u = c v`` for a nonzero scalar ``c`` (both zero counts)."""
    if not any(u) and not any(v):
        return True
    if not any(u) or not any(v):
        return False
    e = Echelon(field)
    e.add({k: x for k, x in enumerate(u) if x})
    return e.add({k: x for k, x in enumerate(v) if x}) is None


@dataclass
class FactorizationWitness:
    target: tuple[int, int]
    factors: tuple[tuple[int, int], tuple[int, int]] | None
    exact: bool
    up_to_unit: bool


FACTORIZATIONS = {5: 4, 10: 6, 17: 15, 19: 18, 21: 20}


def verify_factorization_lemma(ctx: RingContext) -> list[FactorizationWitness]:
    """For every ``Y^(c)``, c in {5,10,17,19,21}, find ``Y^(3) Y^(k)`` with the same class."""
    out = []
    for c, k in FACTORIZATIONS.items():
        for t in ctx.degrees(c):
            best = FactorizationWitness((c, t), None, False, False)
            for t3 in ctx.degrees(3):
                for tk in ctx.degrees(k):
                    if (t3 + tk) % ctx.M != t:
                        continue
                    deg = t3 + tk
                    got = ctx.product_class((3, t3), (k, tk))
                    want = ctx.generator_class(c, t, deg)
                    w = FactorizationWitness((c, t), ((3, t3), (k, tk)), got == want,
                                             proportional(ctx.field, got, want))
                    if w.exact or (w.up_to_unit and not best.up_to_unit):
                        best = w
                    if w.exact:
                        break
                if best.exact:
                    break
            out.append(best)
    return out


@dataclass
class WorkedExample:
    t4: int
    t3: int
    exact: bool
    up_to_unit: bool


def verify_worked_example(ctx: RingContext) -> list[WorkedExample]:
    """``Y^(4) Y^(3)`` against ``Y^(5)`` for every pair of degrees."""
    out = []
    for t4 in ctx.degrees(4):
        for t3 in ctx.degrees(3):
            deg = t4 + t3
            got = ctx.product_class((3, t3), (4, t4))
            want, present = ctx.expected_vector(X(5), deg)
            out.append(WorkedExample(t4, t3, present and got == want, present and proportional(ctx.field, got, want)))
    return out


@dataclass
class GenerationReport:
    s: int
    char: int
    failures: list[str] = field(default_factory=list)
    degrees: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_generation(ctx: RingContext) -> GenerationReport:
    """Every generator is a nonzero class and the generators span each ``HH^t``, ``t < M``."""
    rep = GenerationReport(ctx.s, ctx.char)
    f = ctx.field
    for t in range(ctx.M):
        H = ctx.res.cohomology(t)
        span = Echelon(f)
        for i in sorted({i for (i, tt) in ctx.generators() if tt == t}):
            g = ctx.generator(i, t)
            if not H.is_cocycle(g.cochain):
                rep.failures.append(f"Y^({i})_{t} is not a cocycle")
                continue
            v = H.class_vector(g.cochain)
            if not any(v):
                rep.failures.append(f"Y^({i})_{t} is a coboundary")
            span.add({k: x for k, x in enumerate(v) if x})
        if span.rank != H.dim:
            rep.failures.append(f"degree {t}: generators span {span.rank} of {H.dim}")
        rep.degrees += 1
    return rep
