"""Alexander polynomials: covering links through their monodromy, braid
closures through the reduced Burau representation.

For the fibered two-component covering link L_{2m,k} the reduced Alexander
polynomial satisfies ``reduced_alexander * (t - 1) = charpoly(monodromy)``
up to units, so it is computed by exact division of the monodromy's
characteristic polynomial.

Burau convention: generator beta_j acts on the basis e_1..e_{n-1} by
``e_{j-1} -> e_{j-1} + t e_j``, ``e_j -> -t e_j``, ``e_{j+1} -> e_{j+1} + e_j``
(images are matrix columns, first letter leftmost). At ``t = -1`` this sends
beta_j to the inverse twist ``I - J_j``, and conjugating by
``Q = diag(1, -1, 1, ...)`` turns that into ``D_j``; hence
``burau(w)(-1) == Q . homology_monodromy(w) . Q`` for every word.
"""
from __future__ import annotations

from dataclasses import dataclass

from braidcover import _backend
from braidcover.braidword import BraidWord, b_family, closure_component_count
from braidcover.cover import homology_monodromy
from braidcover.errors import BadIndexError, EmptyWordError
from braidcover.exactmatrix import IntMatrix, char_poly
from braidcover.laurent import (
    LaurentPoly,
    divide_exact,
    evaluate_at_one,
    is_palindromic,
    normalize_unit,
)

__all__ = [
    "CoveringLinkInvariant",
    "PolyMatrix",
    "UnknotEvidence",
    "covering_invariants",
    "theorem_dd",
    "linking_formula",
    "reduced_burau_of_word",
    "burau_basis_change",
    "alexander_of_closure",
    "unknot_evidence",
]

T_MINUS_ONE = LaurentPoly({1: 1, 0: -1})
_ZERO = LaurentPoly()
_ONE = LaurentPoly.constant(1)


@dataclass(frozen=True)
class CoveringLinkInvariant:
    m: int
    k: int
    monodromy: IntMatrix
    char_poly: LaurentPoly
    reduced_alexander: LaurentPoly
    linking_eval: int

    @property
    def linking_abs(self) -> int:
        return abs(self.linking_eval)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "strands": 2 * self.m,
            "monodromy": self.monodromy.to_json(),
            "char_poly": self.char_poly.to_json(),
            "reduced_alexander": self.reduced_alexander.to_json(),
            "reduced_alexander_text": str(self.reduced_alexander),
            "linking_eval": str(self.linking_eval),
            "linking_abs": str(self.linking_abs),
        }


def covering_invariants(m: int, k: int) -> CoveringLinkInvariant:
    """Monodromy, characteristic polynomial and reduced Alexander polynomial
    of L_{2m,k}, all from the word product of B(2m,k)."""
    if m < 2:
        raise BadIndexError(f"covering links are defined for m >= 2, got {m}")
    omega = homology_monodromy(b_family(2 * m, k))
    p = char_poly(omega)
    delta = normalize_unit(divide_exact(p, T_MINUS_ONE))
    return CoveringLinkInvariant(m, k, omega, p, delta, evaluate_at_one(delta))


def theorem_dd(m: int, k: int) -> LaurentPoly:
    """Closed-form reduced Alexander polynomial of L_{2m,k}."""
    if m < 2:
        raise BadIndexError(f"closed form is stated for m >= 2, got {m}")
    if k < 0:
        raise BadIndexError(f"k must be >= 0, got {k}")
    if m == 2:
        return LaurentPoly({2: 1, 1: -(140 * k * k - 174 * k + 56), 0: 1})
    c1 = 140 * k * k - 222 * k + 92
    c2 = 136 * k * k - 258 * k + 119
    c3 = 140 * k * k - 270 * k + 128
    p = LaurentPoly({2 * m - 2: 1, 0: 1}) - LaurentPoly({2 * m - 3: c1, 1: c1})
    p = p + LaurentPoly({2 * j: c2 for j in range(1, m - 1)})
    p = p - LaurentPoly({2 * j + 1: c3 for j in range(1, m - 2)})
    return p


def linking_formula(m: int, k: int) -> int:
    """Predicted value of ``-reduced_alexander(1)``."""
    return (4 * m + 132) * k * k - (12 * m + 150) * k + (9 * m + 36)


# -- Burau --------------------------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    rows: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, rank: int) -> PolyMatrix:
        return cls(tuple(tuple(_ONE if i == j else _ZERO for j in range(rank)) for i in range(rank)))

    def specialize(self, value: int) -> IntMatrix:
        return IntMatrix.from_rows([[p.evaluate(value) for p in row] for row in self.rows])

    def minus_identity(self) -> PolyMatrix:
        return PolyMatrix(
            tuple(tuple(p - 1 if i == j else p for j, p in enumerate(row)) for i, row in enumerate(self.rows))
        )

    def det(self) -> LaurentPoly:
        coeffs = _backend.berkowitz(self.rows, _ZERO, _ONE)
        c = coeffs[-1]
        return -c if self.rank % 2 else c

    def to_json(self) -> dict:
        return {"rank": self.rank, "rows": [[p.to_json() for p in row] for row in self.rows]}


def reduced_burau_of_word(w: BraidWord) -> PolyMatrix:
    n = w.strands
    if n < 2:
        raise BadIndexError(f"reduced Burau needs at least 2 strands, got {n}")
    rank = n - 1
    rows = [[_ONE if i == j else _ZERO for j in range(rank)] for i in range(rank)]
    for letter in w.letters:
        j = abs(letter) - 1
        left = j > 0
        right = j < rank - 1
        if letter > 0:
            for row in rows:
                x = row[j]
                if x.is_zero():
                    continue
                tx = x.shift(1)
                if left:
                    row[j - 1] = row[j - 1] + tx
                if right:
                    row[j + 1] = row[j + 1] + x
                row[j] = -tx
        else:
            for row in rows:
                x = row[j]
                if x.is_zero():
                    continue
                tx = x.shift(-1)
                if left:
                    row[j - 1] = row[j - 1] + x
                if right:
                    row[j + 1] = row[j + 1] + tx
                row[j] = -tx
    return PolyMatrix(tuple(tuple(r) for r in rows))


def burau_basis_change(strands: int) -> IntMatrix:
    """Q with ``burau(w)(-1) == Q . homology_monodromy(w) . Q`` (Q is its own inverse)."""
    rank = strands - 1
    return IntMatrix.from_rows([[(-1) ** i if i == j else 0 for j in range(rank)] for i in range(rank)])


def alexander_of_closure(w: BraidWord) -> LaurentPoly:
    """Alexander polynomial (one variable) of the closure of ``w``.

    ``det(burau(w) - I) = +-t^a (1 + t + ... + t^{n-1}) * Delta(t)``. The
    result is unit-normalized, or the zero polynomial for split closures.
    """
    if not w.letters:
        raise EmptyWordError("the closure formula needs a nonempty word")
    d = reduced_burau_of_word(w).minus_identity().det()
    cyclotomic = LaurentPoly.from_coeffs([1] * w.strands)
    q = divide_exact(d, cyclotomic)
    return q if q.is_zero() else normalize_unit(q)


CONSISTENT = "consistent_with_unknot"
NOT_UNKNOT = "not_unknot"
INCONCLUSIVE = "inconclusive_multicomponent"


@dataclass(frozen=True)
class UnknotEvidence:
    word: str
    components: int
    alexander: LaurentPoly
    verdict: str

    def to_json(self) -> dict:
        return {"word": self.word, "components": self.components, "alexander": self.alexander.to_json(), "verdict": self.verdict}


def unknot_evidence(w: BraidWord, word_id: str | None = None) -> UnknotEvidence:
    """Necessary conditions for the closure of ``w`` to be the unknot."""
    components = closure_component_count(w)
    alex = alexander_of_closure(w)
    if components != 1:
        verdict = INCONCLUSIVE
    elif alex == 1:
        verdict = CONSISTENT
    else:
        verdict = NOT_UNKNOT
    return UnknotEvidence(word_id or str(w), components, alex, verdict)


def palindromy_summary(inv: CoveringLinkInvariant) -> dict:
    return {
        "char_poly_sign": is_palindromic(inv.char_poly),
        "char_poly_degree": inv.char_poly.high_degree,
        "reduced_alexander_sign": is_palindromic(inv.reduced_alexander),
        "constant_term": inv.char_poly.coefficient(0),
    }
