import random

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from braidcover import _backend, _pykernels
from tests import oracles


def _random_letters(rng, rank, length):
    return [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)]


def test_backend_reports_a_known_kernel():
    assert _backend.BACKEND in ("cython", "python")


def test_apply_twists_matches_sympy_product(kernels):
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(2, 7)
        letters = _random_letters(rng, n - 1, rng.randint(0, 25))
        rows = [[int(i == j) for j in range(n - 1)] for i in range(n - 1)]
        kernels.apply_twists(rows, letters)
        assert sp.Matrix(rows) == oracles.monodromy(n, letters)


def test_apply_twists_survives_int64_overflow(kernels):
    big = 2**62
    rows = [[big, big, 0], [0, big, -big], [1, 0, 1]]
    ref = [list(r) for r in rows]
    letters = [1, 2, 2, 3, -1, 2, 3, 3, 2] * 8
    kernels.apply_twists(rows, letters)
    _pykernels.apply_twists(ref, letters)
    assert rows == ref
    assert max(abs(x) for r in rows for x in r) > 2**63


def test_bareiss_det_matches_leibniz(kernels):
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert kernels.bareiss_det([list(r) for r in rows]) == oracles.leibniz_det(rows)


def test_bareiss_det_singular_and_pivoting(kernels):
    assert kernels.bareiss_det([[0, 1], [1, 0]]) == -1
    assert kernels.bareiss_det([[1, 2], [2, 4]]) == 0
    assert kernels.bareiss_det([[0, 0], [0, 5]]) == 0
    assert kernels.bareiss_det([]) == 1


def test_berkowitz_matches_sympy_charpoly(kernels):
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        assert list(kernels.berkowitz(rows, 0, 1)) == oracles.charpoly_coeffs(sp.Matrix(rows))


def test_poly_mul_matches_sympy(kernels):
    rng = random.Random(4)
    for _ in range(50):
        a = [rng.randint(-50, 50) for _ in range(rng.randint(1, 8))]
        b = [rng.randint(-50, 50) for _ in range(rng.randint(1, 8))]
        x = sp.Symbol("x")
        want = sp.Poly(sum(c * x**i for i, c in enumerate(a)) * sum(c * x**i for i, c in enumerate(b)), x)
        got = list(kernels.poly_mul(a, b))
        ref = [int(c) for c in want.all_coeffs()[::-1]] if not want.is_zero else []
        while got and got[-1] == 0:
            got.pop()
        assert got == ref


@given(st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=5), st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=5))
def test_backends_agree_on_poly_mul(a, b):
    ck = pytest.importorskip("braidcover._ckernels")
    assert list(ck.poly_mul(a, b)) == list(_pykernels.poly_mul(a, b))


@given(st.integers(2, 6), st.lists(st.integers(1, 5).flatmap(lambda j: st.sampled_from([j, -j])), max_size=30))
def test_backends_agree_on_twists(n, letters):
    ck = pytest.importorskip("braidcover._ckernels")
    letters = [x for x in letters if abs(x) <= n - 1]
    a = [[int(i == j) for j in range(n - 1)] for i in range(n - 1)]
    b = [list(r) for r in a]
    ck.apply_twists(a, letters)
    _pykernels.apply_twists(b, letters)
    assert a == b
