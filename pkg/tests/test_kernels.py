"""Backend agreement: the compiled scans must match the pure reference exactly."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partialmetric import kernels, random_pm_space
from partialmetric.core import p_m_matrix

from oracles import axiom_violation, metric_violation

F = Fraction

needs_compiled = pytest.mark.skipif(
    not kernels.compiled_available(), reason="compiled extension not built")


def small_matrices(max_n=5):
    def build(draw_vals, n):
        return [[F(draw_vals[i * n + j], 6) for j in range(n)] for i in range(n)]

    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.lists(st.integers(min_value=0, max_value=12),
                           min_size=n * n, max_size=n * n).map(
            lambda vals: build(vals, n)))


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_axiom_scan_backends_agree(matrix):
    assert kernels.axiom_scan(matrix, backend="pure") == kernels.axiom_scan(
        matrix, backend="compiled")


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_metric_scan_backends_agree(matrix):
    assert kernels.metric_scan(matrix, backend="pure") == kernels.metric_scan(
        matrix, backend="compiled")


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_axiom_scan_matches_oracle(matrix):
    hit = kernels.axiom_scan(matrix, backend="pure")
    expected = axiom_violation(matrix)
    if expected is None:
        assert hit is None
    else:
        name, i, j, k = expected
        assert hit is not None
        assert (f"P{hit.code}", hit.i, hit.j, hit.k) == (name, i, j, k)


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_metric_scan_matches_oracle(matrix):
    hit = kernels.metric_scan(matrix, backend="pure")
    assert (hit is None) == (metric_violation(matrix) is None)


def test_random_spaces_pass_both_backends():
    for seed in range(25):
        space = random_pm_space(seed, seed % 7 + 1)
        assert kernels.axiom_scan(space.matrix, backend="pure") is None
        if kernels.compiled_available():
            assert kernels.axiom_scan(space.matrix, backend="compiled") is None
        assert kernels.metric_scan(p_m_matrix(space), backend="pure") is None


def test_wide_numerators_fall_back_to_exact_ints():
    # Numerators past the int64 guard must still give exact verdicts.
    big = F(2**70)
    matrix = [[F(0), big], [big, F(0)]]
    hit = kernels.axiom_scan(matrix)
    assert hit is None
    broken = [[F(1), F(0)], [F(0), big]]
    hit = kernels.axiom_scan(broken)
    assert hit is not None and hit.code == 2


def test_forced_pure_env(monkeypatch):
    monkeypatch.setenv("PARTIALMETRIC_PURE", "1")
    assert kernels.active_backend() == "pure"
    monkeypatch.delenv("PARTIALMETRIC_PURE")


def test_first_violation_is_deterministic():
    # Asymmetric table with several violations: P3 wins only after P1/P2 scans.
    matrix = [[F(0), F(1)], [F(2), F(0)]]
    hit = kernels.axiom_scan(matrix)
    assert (hit.code, hit.i, hit.j) == (3, 0, 1)
