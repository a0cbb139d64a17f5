import random

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from braidcover.alexander import (
    CONSISTENT,
    INCONCLUSIVE,
    NOT_UNKNOT,
    PolyMatrix,
    alexander_of_closure,
    burau_basis_change,
    covering_invariants,
    linking_formula,
    reduced_burau_of_word,
    theorem_dd,
    unknot_evidence,
)
from braidcover.braidword import BraidWord, b_family, bm_step, conjugate, phi_psi_words
from braidcover.cover import homology_monodromy
from braidcover.errors import BadIndexError, EmptyWordError
from braidcover.exactmatrix import mat_mul
from braidcover.laurent import LaurentPoly, is_palindromic, normalize_unit
from tests import oracles
from tests.test_braidword import word_pairs, words

# reduced Alexander polynomials of L(2m,k), coefficients from t^0 up,
# computed by the sympy oracle (characteristic polynomial over (t-1))
FROZEN_DELTA = {
    (2, 0): [1, -56, 1],
    (2, 1): [1, -22, 1],
    (2, 2): [1, -268, 1],
    (2, 3): [1, -794, 1],
    (3, 0): [1, -92, 119, -92, 1],
    (3, 1): [1, -10, -3, -10, 1],
    (3, 2): [1, -208, 147, -208, 1],
    (3, 3): [1, -686, 569, -686, 1],
    (4, 0): [1, -92, 119, -128, 119, -92, 1],
    (4, 1): [1, -10, -3, 2, -3, -10, 1],
    (4, 2): [1, -208, 147, -148, 147, -208, 1],
    (4, 3): [1, -686, 569, -578, 569, -686, 1],
}


class TestCoveringInvariants:
    @pytest.mark.parametrize("mk", list(FROZEN_DELTA))
    def test_frozen_values(self, mk):
        assert covering_invariants(*mk).reduced_alexander == LaurentPoly.from_coeffs(FROZEN_DELTA[mk])

    @pytest.mark.parametrize("m,k", [(2, 0), (3, 1), (4, 2)])
    def test_frozen_values_match_live_oracle(self, m, k):
        assert oracles.reduced_alexander(2 * m, oracles.b_family_letters(2 * m, k)) == FROZEN_DELTA[(m, k)]

    def test_examples(self):
        inv = covering_invariants(2, 0)
        assert inv.reduced_alexander == LaurentPoly({2: 1, 1: -56, 0: 1})
        assert inv.linking_eval == -54 and inv.linking_abs == 54
        assert covering_invariants(2, 1).reduced_alexander == LaurentPoly({2: 1, 1: -22, 0: 1})
        assert covering_invariants(3, 0).linking_eval == -63

    def test_rejects_small_m(self):
        with pytest.raises(BadIndexError):
            covering_invariants(1, 0)

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(2, 7) for k in range(0, 6)])
    def test_structure(self, m, k):
        inv = covering_invariants(m, k)
        assert normalize_unit(inv.reduced_alexander * LaurentPoly({1: 1, 0: -1})) == normalize_unit(inv.char_poly)
        assert is_palindromic(inv.reduced_alexander) == 1
        assert is_palindromic(inv.char_poly) == -1
        assert inv.char_poly.high_degree == 2 * m - 1

    def test_json(self):
        data = covering_invariants(2, 0).to_json()
        assert data["linking_eval"] == "-54"
        assert data["reduced_alexander_text"] == "t^2 - 56*t + 1"
        assert data["strands"] == 4


class TestClosedFormPolynomial:
    def test_examples(self):
        assert theorem_dd(2, 0) == LaurentPoly({2: 1, 1: -56, 0: 1})
        assert theorem_dd(3, 0) == LaurentPoly({4: 1, 3: -92, 2: 119, 1: -92, 0: 1})
        assert theorem_dd(3, 1) == LaurentPoly({4: 1, 3: -10, 2: -3, 1: -10, 0: 1})

    def test_rejects_out_of_range(self):
        with pytest.raises(BadIndexError):
            theorem_dd(1, 0)
        with pytest.raises(BadIndexError):
            theorem_dd(2, -1)

    @given(st.integers(2, 12), st.integers(0, 20))
    def test_palindromic_monic(self, m, k):
        p = theorem_dd(m, k)
        assert is_palindromic(p) == 1
        assert p.coefficient(0) == 1 and p.coefficient(p.high_degree) == 1
        assert p.high_degree == 2 * m - 2

    @pytest.mark.parametrize("mk", list(FROZEN_DELTA))
    def test_agrees_with_frozen_oracle(self, mk):
        assert normalize_unit(theorem_dd(*mk)) == LaurentPoly.from_coeffs(FROZEN_DELTA[mk])

    def test_linking_formula_examples(self):
        assert linking_formula(2, 0) == 54
        assert linking_formula(2, 1) == 20
        assert linking_formula(3, 1) == 21

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(2, 6) for k in range(0, 6)])
    def test_linking_formula_matches_oracle(self, m, k):
        assert covering_invariants(m, k).linking_eval + linking_formula(m, k) == 0


class TestBurau:
    def test_single_generator(self):
        b = reduced_burau_of_word(BraidWord(2, (1,)))
        assert b.rows == ((LaurentPoly({1: -1}),),)

    def test_empty_word_is_identity(self):
        assert reduced_burau_of_word(BraidWord(4, ())) == PolyMatrix.identity(3)

    def test_needs_two_strands(self):
        with pytest.raises(BadIndexError):
            reduced_burau_of_word(BraidWord(1, ()))

    @given(words(max_len=10, max_strands=5))
    def test_matches_sympy_product(self, w):
        ours = reduced_burau_of_word(w)
        theirs = oracles.burau(w.strands, w.letters)
        for i, row in enumerate(ours.rows):
            for j, p in enumerate(row):
                expr = sum(c * oracles.t**e for e, c in p.terms.items())
                assert sp.simplify(expr - theirs[i, j]) == 0

    @given(words())
    def test_specialization_at_minus_one(self, w):
        q = burau_basis_change(w.strands)
        b = reduced_burau_of_word(w).specialize(-1)
        assert b == mat_mul(mat_mul(q, homology_monodromy(w)), q)


class TestClosure:
    def test_examples(self):
        assert alexander_of_closure(BraidWord(2, (1,))) == 1
        assert alexander_of_closure(b_family(4, 0)) == 1
        assert alexander_of_closure(BraidWord(2, (1, 1, 1))) == LaurentPoly({2: 1, 1: -1, 0: 1})

    def test_figure_eight_and_cinquefoil(self):
        assert alexander_of_closure(BraidWord(3, (1, -2, 1, -2))) == LaurentPoly.from_coeffs([1, -3, 1])
        assert alexander_of_closure(BraidWord(2, (1,) * 5)) == LaurentPoly.from_coeffs([1, -1, 1, -1, 1])

    def test_split_closure_gives_zero(self):
        assert alexander_of_closure(BraidWord(4, (2,))).is_zero()

    def test_empty_word(self):
        with pytest.raises(EmptyWordError):
            alexander_of_closure(BraidWord(3, ()))

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_sympy_closure(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 4)
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 8))]
        got = alexander_of_closure(BraidWord(n, tuple(letters)))
        want = oracles.closure_alexander(n, letters)
        assert (list(got.coeffs) if not got.is_zero() else []) == want

    @given(word_pairs())
    def test_conjugation_invariance(self, wu):
        w, u = wu
        if not w.letters:
            w = BraidWord(w.strands, (1,))
        assert alexander_of_closure(conjugate(w, u)) == alexander_of_closure(w)

    @given(st.integers(4, 6), st.data())
    def test_birman_menasco_move_preserves_polynomial(self, m, data):
        gen = st.integers(1, m - 2).flatmap(lambda j: st.sampled_from([j, -j]))
        phi = BraidWord(m, tuple(data.draw(st.lists(gen, max_size=8))))
        psi = BraidWord(m, tuple(data.draw(st.lists(gen, max_size=8))))
        before = BraidWord(m, phi.letters + (m - 1,) + psi.letters + (-(m - 1),))
        assert alexander_of_closure(bm_step(phi, psi, m)) == alexander_of_closure(before)


class TestUnknotEvidence:
    @pytest.mark.parametrize("m,k", [(m, k) for m in range(4, 8) for k in range(0, 4)])
    def test_family_consistent(self, m, k):
        ev = unknot_evidence(b_family(m, k))
        assert ev.verdict == CONSISTENT and ev.components == 1

    def test_trefoil_is_not_unknot(self):
        assert unknot_evidence(BraidWord(2, (1, 1, 1))).verdict == NOT_UNKNOT

    def test_multicomponent_inconclusive(self):
        ev = unknot_evidence(BraidWord(4, (2,)))
        assert ev.verdict == INCONCLUSIVE and ev.components == 3

    def test_json(self):
        data = unknot_evidence(b_family(4, 0), "B(4,0)").to_json()
        assert data == {"word": "B(4,0)", "components": 1, "alexander": LaurentPoly.constant(1).to_json(), "verdict": CONSISTENT}

    def test_phi_psi_halves_close_up(self):
        phi, psi = phi_psi_words(6)
        assert unknot_evidence(BraidWord(6, phi.letters + (5,) + psi.letters + (-5,))).verdict == CONSISTENT
