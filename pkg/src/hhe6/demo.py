"""Small demo algebras with hand-written resolutions."""

from __future__ import annotations

from .bimodule import BimoduleComplex, BimoduleMap
from .field import FieldSpec
from .pathalg import Algebra, ArrowLabel, Quiver


def dual_numbers(char: int) -> Algebra:
    """``K[x] / (x^2)`` as a one-loop quiver algebra."""
    q = Quiver(("v",), (ArrowLabel("x", 0, 0),))
    return Algebra(q, FieldSpec.of_characteristic(char), [{(0, 0): 1}], 2)


def dual_numbers_resolution(char: int) -> BimoduleComplex:
    """The 2-periodic resolution with ``d`` alternating ``x(x)1 - 1(x)x`` and ``x(x)1 + 1(x)x``."""
    alg = dual_numbers(char)
    e = alg.idempotents[0]
    x = next(k for k, p in enumerate(alg.basis) if p.length == 1)
    one = alg.field.one()
    term = ((0, 0),)

    def diff(t: int) -> BimoduleMap:
        sign = alg.field.neg(one) if t % 2 == 0 else one
        return BimoduleMap(alg, term, term, [{0: {(x, e): one, (e, x): sign}}])

    return BimoduleComplex(alg, lambda t: term, diff)
