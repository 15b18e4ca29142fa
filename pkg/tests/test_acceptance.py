"""Acceptance criteria 1-10; each prints one PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest,
where the lines are also collected in the terminal summary.
"""

from __future__ import annotations

import os
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from hhe6.bar import BarComplex
from hhe6.demo import dual_numbers, dual_numbers_resolution
from hhe6.e6.dims import compare_dims
from hhe6.e6.happel import happel_check, printed_terms
from hhe6.e6.quiver import e6_algebra, label_vertex, sigma_order, sigma_order_formula
from hhe6.e6.resolution import Mutation, e6_resolution
from hhe6.e6.ring import RingContext, verify_factorization_lemma, verify_generation, verify_worked_example
from hhe6.e6.translates import FIXTURE_FAMILIES, fixture_degrees, translate_fixture_check
from hhe6.e6.verify import verify_resolution
from hhe6.modules import is_simple_at, simple_resolution

from conftest import CHARS

RESULTS: dict[int, tuple[bool, str]] = {}


@contextmanager
def criterion(n: int, title: str):
    ok = False
    try:
        yield
        ok = True
    finally:
        RESULTS[n] = (ok, title)
        print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")


def test_criterion_01_dual_numbers_oracle():
    with criterion(1, "dual numbers: bar oracle equals resolution for t <= 4, HH^0 is the centre"):
        start = time.perf_counter()
        for char in (2, 3, 0):
            bar = BarComplex(dual_numbers(char), 4)
            res = dual_numbers_resolution(char)
            assert [bar.hh_dim(t) for t in range(5)] == [res.hh_dim(t) for t in range(5)], char
            assert res.hh_dim(0) == dual_numbers(char).center_dim()
        assert time.perf_counter() - start < 1.0


def test_criterion_02_resolution_complex():
    with criterion(2, "shapes, d^2 = 0 through the seam and exactness through degree 10"):
        for s in (1, 2, 3):
            for char in CHARS:
                rows = verify_resolution(s, char, 11, happel=False)
                bad = [r for r in rows if not r.ok]
                assert not bad, (s, char, bad[:3])
                squares = {r.degree for r in rows if r.check == "d^2=0"}
                exact = {r.degree for r in rows if r.check == "exactness"}
                shapes = {r.degree for r in rows if r.check == "shape"}
                assert squares == set(range(11)) and exact == set(range(1, 12)) and shapes == set(range(12))


def test_criterion_03_happel():
    with criterion(3, "Happel: Ext between simples matches the terms through degree 9"):
        for s in (1, 2):
            for char in CHARS:
                rep = happel_check(s, char, e6_resolution(s, char).term, 9)
                assert rep.ok and rep.checked > 0, (s, char, rep.failures[:3])
            alg = e6_algebra(s, 0)
            for r in range(2 * s):
                for k in (0, 1, 2, 3):
                    _, deg, want = printed_terms(s, k, r)
                    sr = simple_resolution(alg, label_vertex(4 * r + k, s), deg)
                    assert is_simple_at(sr.syzygies[deg], label_vertex(want, s)), (s, k, r)


def test_criterion_04_dims():
    with criterion(4, "Hom, Im and HH dimensions match the closed formulas for t < 2M"):
        for s in (1, 2, 3):
            for char in CHARS:
                res = e6_resolution(s, char)
                rows = compare_dims(res, range(2 * res.period))
                assert all(r.ok for r in rows), (s, char, [r.t for r in rows if not r.ok][:5])
                if s == 1:
                    assert rows[0].hh == 3
        assert compare_dims(e6_resolution(2, 3), [0])[0].im == 11


def test_criterion_05_sigma_and_periodicity():
    with criterion(5, "order of sigma matches the formula and HH^t = HH^(t+M)"):
        for s in range(1, 7):
            for char in CHARS:
                assert sigma_order(s, char) == sigma_order_formula(s, char), (s, char)
        for s in (1, 2):
            for char in CHARS:
                res = e6_resolution(s, char)
                M = res.period
                assert [res.hh_dim(t) for t in range(1, 12)] == [res.hh_dim(t + M) for t in range(1, 12)]


def test_criterion_06_generators():
    with criterion(6, "generators are nonzero cocycles that generate HH^t for t < M"):
        for s in (1, 2):
            for char in CHARS:
                ctx = RingContext(e6_resolution(s, char))
                for i, t in ctx.generators():
                    H = ctx.res.cohomology(t)
                    cochain = ctx.generator(i, t).cochain
                    assert H.is_cocycle(cochain) and any(H.class_vector(cochain)), (s, char, i, t)
                rep = verify_generation(ctx)
                assert rep.ok and rep.degrees == ctx.M, (s, char, rep.failures[:3])


def test_criterion_07_relations():
    with criterion(7, "relations hold exactly, with the worked example and the factorization lemma"):
        for s in (1, 2):
            for char in CHARS:
                ctx = RingContext(e6_resolution(s, char))
                checks = ctx.verify_relations()
                assert checks
                bad = [(x.relation, x.a, x.b) for x in checks if not (x.exact and x.up_to_unit)]
                assert not bad, (s, char, bad[:3])
                assert all(w.exact for w in verify_worked_example(ctx))
                fac = verify_factorization_lemma(ctx)
                assert all(w.exact for w in fac)
                if s == 1:
                    assert {w.target[0] for w in fac} == {5, 10, 17, 19, 21}


def test_criterion_08_translates():
    with criterion(8, "tabulated translates commute with the differentials"):
        covered = set()
        for s in (1, 2):
            for char in CHARS:
                res = e6_resolution(s, char)
                for i in FIXTURE_FAMILIES:
                    for t in fixture_degrees(i, s, char, res.period):
                        rep = translate_fixture_check(res, i, t)
                        assert rep.ok, (s, char, i, t, rep.failures[:3])
                        covered.add(i)
        assert covered == set(FIXTURE_FAMILIES)


def test_criterion_09_mutations():
    with criterion(9, "every single-entry mutation of d_0..d_10 is detected"):
        for s, char in ((1, 0), (2, 3)):
            for degree in range(11):
                rows = verify_resolution(s, char, 11, Mutation(degree), happel=False)
                assert any(not r.ok for r in rows), (s, char, degree)


def _cli(argv: list[str], threads: str) -> bytes:
    env = dict(os.environ, HH_THREADS=threads)
    proc = subprocess.run([sys.executable, "-m", "hhe6.cli", *argv], capture_output=True, env=env, check=False)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_criterion_10_cli_determinism():
    with criterion(10, "CLI JSON and CSV are byte-identical across runs and HH_THREADS"):
        commands = (["verify-resolution", "--s", "2", "--char", "3"], ["dims", "--s", "2", "--char", "5"],
                    ["ring", "--s", "1", "--char", "2"])
        for argv in commands:
            for fmt in ("json", "csv"):
                outs = [_cli([*argv, "--format", fmt], threads) for threads in ("1", "1", "4")]
                assert outs[0] and outs[0] == outs[1] == outs[2], (argv, fmt)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
