import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from braidcover.braidword import BraidWord, b_family, concat, conjugate, gamma_word, phi_psi_words
from braidcover.cover import (
    closed_matrix,
    compare_closed_vs_oracle,
    dehn_twist_matrix,
    gamma_power_closed,
    homology_monodromy,
    omega_closed,
    omega_coefficients,
    oracle_matrix,
    phi_closed,
    psi_closed,
)
from braidcover.errors import BadIndexError
from braidcover.exactmatrix import IntMatrix, char_poly, det, mat_mul, mat_pow
from braidcover.laurent import is_palindromic
from tests import oracles
from tests.test_braidword import word_pairs, words

M = IntMatrix.from_rows


class TestTwists:
    def test_examples(self):
        assert dehn_twist_matrix(4, 2, 1) == M([[1, 0, 0], [1, 1, -1], [0, 0, 1]])
        assert dehn_twist_matrix(4, 1, 1) == M([[1, -1, 0], [0, 1, 0], [0, 0, 1]])
        assert dehn_twist_matrix(4, 2, -1) == M([[1, 0, 0], [-1, 1, 1], [0, 0, 1]])
        assert dehn_twist_matrix(4, 3, 1) == M([[1, 0, 0], [0, 1, 0], [0, 1, 1]])

    @pytest.mark.parametrize("args", [(4, 0, 1), (4, 4, 1), (1, 1, 1), (4, 1, 2)])
    def test_bad_arguments(self, args):
        with pytest.raises(BadIndexError):
            dehn_twist_matrix(*args)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_unit_determinant_and_inverse_pair(self, n):
        for j in range(1, n):
            d, e = dehn_twist_matrix(n, j, 1), dehn_twist_matrix(n, j, -1)
            assert det(d) == 1
            assert mat_mul(d, e) == IntMatrix.identity(n - 1)
            assert d.to_lists() == oracles.twist(n, j, 1).tolist()


class TestMonodromy:
    def test_family_example(self):
        assert homology_monodromy(b_family(4, 0)) == M([[-10, -17, 11], [46, 73, -46], [7, 10, -6]])

    def test_empty_word(self):
        assert homology_monodromy(BraidWord(5, ())) == IntMatrix.identity(4)

    def test_gamma_word(self):
        assert homology_monodromy(gamma_word(2, 4)) == M([[-1, -2, 2], [0, -1, 0], [0, 0, 1]])

    def test_needs_two_strands(self):
        with pytest.raises(BadIndexError):
            homology_monodromy(BraidWord(1, ()))

    @given(words())
    def test_matches_sympy_product(self, w):
        assert homology_monodromy(w).to_lists() == oracles.monodromy(w.strands, w.letters).tolist()

    @given(word_pairs())
    def test_functorial(self, ab):
        a, b = ab
        assert homology_monodromy(concat(a, b)) == mat_mul(homology_monodromy(a), homology_monodromy(b))

    @given(words())
    def test_unit_determinant(self, w):
        assert det(homology_monodromy(w)) == 1

    @given(word_pairs())
    def test_char_poly_conjugation_invariant(self, ab):
        w, u = ab
        assert char_poly(homology_monodromy(conjugate(w, u))) == char_poly(homology_monodromy(w))

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(2, 6) for k in range(0, 4)])
    def test_family_char_poly_antipalindromic(self, m, k):
        p = char_poly(homology_monodromy(b_family(2 * m, k)))
        assert p.high_degree == 2 * m - 1
        assert is_palindromic(p) == -1
        assert p.evaluate(1) == 0


class TestGammaClosedForm:
    def test_examples(self):
        assert gamma_power_closed(4, 1) == M([[-1, -2, 2], [0, -1, 0], [0, 0, 1]])
        assert gamma_power_closed(4, 2) == M([[1, 4, 0], [0, 1, 0], [0, 0, 1]])
        for n in range(4, 11):
            assert gamma_power_closed(n, 0) == IntMatrix.identity(n - 1)

    def test_rejects_small_n(self):
        with pytest.raises(BadIndexError):
            gamma_power_closed(3, 1)

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_even_n_matches_power_oracle(self, n):
        g = homology_monodromy(gamma_word(n - 2, n))
        for k in range(-5, 6):
            assert gamma_power_closed(n, k) == mat_pow(g, k)

    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_odd_n_differs_from_power_oracle(self, n):
        g = homology_monodromy(gamma_word(n - 2, n))
        assert any(gamma_power_closed(n, k) != mat_pow(g, k) for k in range(1, 3))

    @given(st.integers(4, 10), st.integers(-6, 6), st.integers(-6, 6))
    def test_power_law(self, n, j, k):
        assert mat_mul(gamma_power_closed(n, j), gamma_power_closed(n, k)) == gamma_power_closed(n, j + k)


class TestFamilyClosedForms:
    def test_phi_first_rows(self):
        # rank 5 at six strands: (10k+2, 6k, 0, 20k^2-8k-1, -10k-1) at k=0
        assert phi_closed(6, 0).rows[0] == (2, 0, 0, -1, -1)
        assert phi_closed(8, 1).rows[0] == (12, 6, 0, 0, 0, 11, -11)
        for m2, k in [(6, 0), (8, 1), (10, 3)]:
            last = phi_closed(m2, k).rows[-1]
            assert last == (0,) * (m2 - 2) + (1,)

    def test_psi_rows(self):
        assert psi_closed(6).rank == 5
        assert psi_closed(6).rows[0] == (2, 0, 0, 1, -1)
        assert psi_closed(8).rows[1] == (7, -3, 0, 0, 0, 7, -7)
        for m2 in (6, 8, 10):
            assert psi_closed(m2).rows[-1] == (0,) * (m2 - 2) + (1,)

    def test_omega_coefficients(self):
        assert omega_coefficients(0) == (-10, 8, -25)
        assert omega_coefficients(1) == (66, -18, 119)

    def test_omega_rows(self):
        w = omega_closed(6, 0)
        assert w.rank == 5
        assert w.rows[-1] == (7, -4, 0, 14, -16)
        assert omega_closed(8, 0).rows[1] == (4, 1, -1, 0, 0, 3, -3)

    @pytest.mark.parametrize("fn,args", [(phi_closed, (7, 0)), (phi_closed, (4, 0)), (psi_closed, (5,)), (omega_closed, (9, 1))])
    def test_odd_or_small_strand_counts_rejected(self, fn, args):
        with pytest.raises(BadIndexError):
            fn(*args)

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_psi_matches_oracle(self, m):
        assert psi_closed(2 * m) == homology_monodromy(phi_psi_words(2 * m)[1])

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(3, 6) for k in range(0, 5)])
    def test_phi_differs_only_in_the_constant_term_column(self, m, k):
        closed = phi_closed(2 * m, k)
        oracle = oracle_matrix("phi", {"m": m, "k": k})
        rank = 2 * m - 1
        diff = {(r, c): closed.rows[r][c] - oracle.rows[r][c] for r in range(rank) for c in range(rank) if closed.rows[r][c] != oracle.rows[r][c]}
        # the even rows' entry printed as 2k-11 is 2k-1 in the oracle
        assert diff == {(r, rank - 2): -10 for r in range(1, rank - 2, 2)}

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(3, 6) for k in range(0, 5)])
    def test_omega_differs_in_two_cells(self, m, k):
        closed = omega_closed(2 * m, k)
        oracle = oracle_matrix("omega", {"m": m, "k": k})
        rank = 2 * m - 1
        diff = {(r, c): closed.rows[r][c] - oracle.rows[r][c] for r in range(rank) for c in range(rank) if closed.rows[r][c] != oracle.rows[r][c]}
        assert diff == {(rank - 3, rank - 2): 2, (rank - 1, rank - 1): -10}

    def test_closed_matrix_dispatch(self):
        assert closed_matrix("psi", {"m": 3}) == psi_closed(6)
        assert closed_matrix("gamma", {"n": 5, "k": 2}) == gamma_power_closed(5, 2)
        with pytest.raises(ValueError):
            closed_matrix("delta", {})


class TestCompare:
    def test_gamma_small_cases_equal(self):
        r = compare_closed_vs_oracle("gamma", n_range=[4], k_range=[1, 2])
        assert r.all_equal and len(r.cases) == 2

    def test_omega_m2_rejected_with_reason(self):
        r = compare_closed_vs_oracle("omega", m_range=[2, 3], k_range=[0])
        assert [x["params"] for x in r.rejected] == [{"m": 2, "k": 0}]
        assert "m >= 3" in r.rejected[0]["reason"]
        assert [c.params for c in r.cases] == [{"m": 3, "k": 0}]

    def test_psi_six_strands_recorded(self):
        r = compare_closed_vs_oracle("psi", m_range=[3])
        assert len(r.cases) == 1 and r.cases[0].equal

    def test_negative_k_rejected_for_phi(self):
        r = compare_closed_vs_oracle("phi", m_range=[3], k_range=[-1, 0])
        assert [x["params"]["k"] for x in r.rejected] == [-1]

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            compare_closed_vs_oracle("delta")

    def test_mismatch_json_carries_full_diff(self):
        r = compare_closed_vs_oracle("omega", m_range=[3], k_range=[0])
        data = r.to_json()["cases"][0]
        assert data["equal"] is False
        assert {"closed", "oracle", "difference"} <= set(data)
        assert data["diff_positions"] == [[2, 3], [4, 4]]

    def test_parallel_order_matches_serial(self):
        kwargs = dict(n_range=range(4, 9), k_range=range(-2, 3))
        serial = compare_closed_vs_oracle("gamma", **kwargs).to_json()
        parallel = compare_closed_vs_oracle("gamma", jobs=3, **kwargs).to_json()
        assert serial == parallel


def test_burau_at_minus_one_is_conjugate_monodromy():
    # independent check of the twist convention through the sympy Burau product
    for letters in ([1, -2, 3, 3, -1], [2, 2, -1], list(b_family(4, 0).letters)):
        n = 4
        b = oracles.burau(n, letters).subs(oracles.t, -1)
        q = sp.diag(*[(-1) ** i for i in range(n - 1)])
        assert b == q * sp.Matrix(homology_monodromy(BraidWord(n, tuple(letters))).to_lists()) * q
