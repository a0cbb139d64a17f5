"""Formal Seiberg-Witten product calculus in one variable.

Everything lives in Laurent polynomials in ``s = t^(1/2)``; a ``t`` exponent
``e`` becomes the ``s`` exponent ``2e``. For a link surgery manifold built
from pieces X_j,

    SW = Delta_sym(t) * prod_j SW_{X_j} * (s - 1/s)

on the diagonal t_j = t. The rational elliptic surface E(1) has
SW = 1/(s - 1/s), so its factor is exactly 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from braidcover.alexander import covering_invariants
from braidcover.errors import BadIndexError, NonReciprocalError
from braidcover.laurent import LaurentPoly, evaluate_at_one, normalize_unit, symmetrize

__all__ = [
    "SWExpr",
    "Piece",
    "E1",
    "explicit",
    "to_s_variable",
    "sw_link_surgery",
    "total_sw",
    "distinguish",
    "e1_family_invariant",
    "covering_fiber_data",
]

S_MINUS_INV = LaurentPoly({1: 1, -1: -1}, variable="s")


@dataclass(frozen=True)
class SWExpr:
    poly: LaurentPoly

    def __post_init__(self):
        if self.poly.variable != "s":
            object.__setattr__(self, "poly", self.poly.with_variable("s"))

    def __mul__(self, other: SWExpr) -> SWExpr:
        return SWExpr(self.poly * other.poly)

    def __eq__(self, other):
        if isinstance(other, SWExpr):
            return self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)

    def to_t_variable(self) -> LaurentPoly:
        """Inverse of :func:`to_s_variable`; needs every exponent even."""
        terms = self.poly.terms
        if any(e % 2 for e in terms):
            raise ValueError("odd s-exponents have no t-polynomial form")
        return LaurentPoly({e // 2: c for e, c in terms.items()})

    def to_json(self) -> dict:
        out = self.poly.to_json()
        out["s2_equals_t"] = True
        return out


@dataclass(frozen=True)
class Piece:
    kind: str
    sw: SWExpr | None = None

    def __post_init__(self):
        if self.kind not in ("E1", "explicit"):
            raise ValueError(f"unknown piece kind {self.kind!r}")
        if (self.kind == "explicit") != (self.sw is not None):
            raise ValueError("explicit pieces carry an SW expression, E1 pieces do not")

    def surgery_factor(self) -> LaurentPoly:
        """SW_X * (s - 1/s)."""
        if self.kind == "E1":
            return LaurentPoly.constant(1, "s")
        return self.sw.poly * S_MINUS_INV


E1 = Piece("E1")


def explicit(sw: LaurentPoly | SWExpr | int) -> Piece:
    if isinstance(sw, int):
        sw = LaurentPoly.constant(sw, "s")
    if isinstance(sw, LaurentPoly):
        sw = SWExpr(sw)
    return Piece("explicit", sw)


def to_s_variable(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({2 * e: c for e, c in p.terms.items()}, variable="s")


def sw_link_surgery(delta_sym: LaurentPoly, pieces: Sequence[Piece]) -> SWExpr:
    if not pieces:
        raise ValueError("need at least one piece")
    if delta_sym.reciprocal() != delta_sym:
        raise NonReciprocalError(f"{delta_sym} is not symmetric under t -> 1/t")
    out = to_s_variable(delta_sym)
    for piece in pieces:
        out = out * piece.surgery_factor()
    return SWExpr(out)


def total_sw(e: SWExpr) -> int:
    """Sum of all coefficients, i.e. the value at s = 1."""
    return evaluate_at_one(e.poly)


DISTINCT = "distinct"
NOT_DISTINCT = "not_distinct"
INCONCLUSIVE = "inconclusive"


def distinguish(m: int, i: int, j: int, sw_nonzero: bool = True) -> str:
    """Whether the covers for k=i and k=j are told apart by the product formula.

    With SW_X nonzero the common factor SW_X^2 (s - 1/s)^2 cancels in the
    integral domain, so only the reduced Alexander polynomials are compared.
    """
    if not sw_nonzero:
        return INCONCLUSIVE
    if i == j:
        return NOT_DISTINCT
    a = normalize_unit(covering_invariants(m, i).reduced_alexander)
    b = normalize_unit(covering_invariants(m, j).reduced_alexander)
    return DISTINCT if a != b else NOT_DISTINCT


def e1_family_invariant(m: int, k: int) -> int:
    """Total SW invariant of the cover of E(1) branched along the (m, k) torus."""
    delta = covering_invariants(m, k).reduced_alexander
    return total_sw(sw_link_surgery(symmetrize(delta), [E1, E1]))


def covering_fiber_data(m2: int) -> dict:
    if m2 % 2 or m2 < 4:
        raise BadIndexError(f"need an even strand count 2m >= 4, got {m2}")
    m = m2 // 2
    return {
        "strands": m2,
        "fiber_genus": m - 1,
        "boundary_components": 2,
        "h1_rank": 2 * m - 1,
        "lefschetz_fiber_genus": 2 * m - 1,
    }
