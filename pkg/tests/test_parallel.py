from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from hhe6.parallel import ENV_VAR, pmap, thread_count


def test_thread_count(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert thread_count() == 1
    monkeypatch.setenv(ENV_VAR, "6")
    assert thread_count() == 6
    for bad in ("zero", "", "-2", "0"):
        monkeypatch.setenv(ENV_VAR, bad)
        assert thread_count() == 1


@given(st.lists(st.integers(), max_size=30), st.integers(1, 8))
def test_pmap_keeps_order(xs, n):
    assert pmap(lambda x: x * x, xs, threads=n) == [x * x for x in xs]
