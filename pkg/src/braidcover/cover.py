"""Homological monodromy of the double branched covering links.

Each generator beta_j lifts to a Dehn twist on the fiber of the covering
link, acting on H_1 (rank n-1 for an n-strand braid) by ``D_j = I + J_j``
where row j of ``J_j`` has +1 in column j-1 and -1 in column j+1. A word
maps to the product of its twist matrices with the first letter as the
leftmost factor; with this order B(4,0) gives::

    [[-10, -17,  11],
     [ 46,  73, -46],
     [  7,  10,  -6]]

The closed-form families below (``gamma_power_closed``, ``phi_closed``,
``psi_closed``, ``omega_closed``) are literal transcriptions of the
published displays, printed entries included. They are checked against the
word-product oracle by :func:`compare_closed_vs_oracle`, which reports any
difference rather than correcting it.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from braidcover import _backend
from braidcover.braidword import BraidWord, b_family, gamma_word, invert, phi_psi_words
from braidcover.errors import BadIndexError
from braidcover.exactmatrix import IntMatrix, mat_pow

__all__ = [
    "dehn_twist_matrix",
    "homology_monodromy",
    "gamma_power_closed",
    "phi_closed",
    "psi_closed",
    "omega_closed",
    "omega_coefficients",
    "oracle_matrix",
    "closed_matrix",
    "compare_closed_vs_oracle",
    "CaseResult",
    "DiscrepancyReport",
    "FAMILIES",
]


def dehn_twist_matrix(strands: int, j: int, sign: int = 1) -> IntMatrix:
    if strands < 2:
        raise BadIndexError(f"need at least 2 strands, got {strands}")
    if not 1 <= j <= strands - 1:
        raise BadIndexError(f"generator {j} out of range for {strands} strands")
    if sign not in (1, -1):
        raise BadIndexError(f"sign must be +1 or -1, got {sign}")
    rank = strands - 1
    rows = [[int(r == c) for c in range(rank)] for r in range(rank)]
    if j > 1:
        rows[j - 1][j - 2] = sign
    if j < rank:
        rows[j - 1][j] = -sign
    return IntMatrix.from_rows(rows)


def homology_monodromy(w: BraidWord) -> IntMatrix:
    if w.strands < 2:
        raise BadIndexError(f"need at least 2 strands, got {w.strands}")
    rank = w.strands - 1
    rows = [[int(r == c) for c in range(rank)] for r in range(rank)]
    _backend.apply_twists(rows, w.letters)
    return IntMatrix.from_rows(rows)


# -- closed forms ----------------------------------------------------------------


def _blank(rank: int) -> list[list[int]]:
    return [[0] * rank for _ in range(rank)]


def _set_outer(row: list[int], first: int, second: int, penult: int, last: int):
    row[0], row[1], row[-2], row[-1] = first, second, penult, last


def gamma_power_closed(n: int, k: int) -> IntMatrix:
    """Closed form for the k-th power of Gamma_{n-2} in rank n-1.

    Upper-left block +-I_{n-3} (sign (-1)^k); in the last two columns the
    block rows alternate between (2k, 0) and (0, 0) for even k, or
    (-2k, 2) and (0, 0) for odd k, with the bottom block row carrying the
    nonzero pair. The last two rows are (..., +-1, 0) and (..., 0, 1).
    """
    if n < 4:
        raise BadIndexError(f"gamma closed form needs n >= 4, got {n}")
    rank = n - 1
    odd = k % 2 == 1
    diag = -1 if odd else 1
    pair = (-2 * k, 2) if odd else (2 * k, 0)
    rows = _blank(rank)
    block = n - 3
    for i in range(block):
        rows[i][i] = diag
        if (block - 1 - i) % 2 == 0:
            rows[i][rank - 2], rows[i][rank - 1] = pair
    rows[rank - 2][rank - 2] = diag
    rows[rank - 1][rank - 1] = 1
    return IntMatrix.from_rows(rows)


def _even_strands(m2: int, what: str) -> int:
    if m2 % 2 or m2 < 6:
        raise BadIndexError(f"{what} needs an even strand count 2m >= 6, got {m2}")
    return m2 - 1


def phi_closed(m2: int, k: int) -> IntMatrix:
    """Closed form for Gamma^-k.Phi_{2m}.Gamma^k, transcribed as printed.

    The printed entry ``2k - 11`` in the even rows is reproduced verbatim.
    """
    rank = _even_strands(m2, "phi closed form")
    if k < 0:
        raise BadIndexError(f"k must be >= 0, got {k}")
    top = 20 * k * k - 8 * k - 1
    rows = _blank(rank)
    # rows 1 .. rank-3 (1-based); the -1 superdiagonal starts in row 2
    for i in range(1, rank - 2):
        row = rows[i - 1]
        if i == 1:
            _set_outer(row, 10 * k + 2, 6 * k, top, -10 * k - 1)
        elif i % 2 == 0:
            _set_outer(row, 2, 1, 2 * k - 11, -1)
        else:
            _set_outer(row, 10 * k + 2, 6 * k + 1, top, -10 * k - 1)
        if i >= 2:
            row[i] = -1
    _set_outer(rows[rank - 3], 10 * k + 2, 6 * k + 1, top - 1, -10 * k - 1)
    _set_outer(rows[rank - 2], -5, -3, -10 * k + 6, 5)
    rows[rank - 1][rank - 1] = 1
    return IntMatrix.from_rows(rows)


def psi_closed(m2: int) -> IntMatrix:
    rank = _even_strands(m2, "psi closed form")
    rows = _blank(rank)
    _set_outer(rows[0], 2, 0, 1, -1)
    _set_outer(rows[1], 7, -3, 7, -7)
    # identity block occupies rows/columns 3 .. rank-2, signs alternate from -7
    for i in range(3, rank - 1):
        s = -1 if i % 2 else 1
        _set_outer(rows[i - 1], 7 * s, -4 * s, 7 * s, -7 * s)
        rows[i - 1][i - 1] = 1
    _set_outer(rows[rank - 2], 7, -4, 8, -7)
    rows[rank - 1][rank - 1] = 1
    return IntMatrix.from_rows(rows)


def omega_coefficients(k: int) -> tuple[int, int, int]:
    """(a(k), b(k), c(k)) of the monodromy closed form."""
    return (
        140 * k * k - 64 * k - 10,
        -80 * k * k + 54 * k + 8,
        300 * k * k - 156 * k - 25,
    )


def omega_closed(m2: int, k: int) -> IntMatrix:
    """Closed form for the monodromy of L_{2m,k}, transcribed as printed.

    Printed entries are kept verbatim, including ``c(k)+1`` in row 2m-3
    and ``-16`` in the corner.
    """
    rank = _even_strands(m2, "omega closed form")
    if k < 0:
        raise BadIndexError(f"k must be >= 0, got {k}")
    a, b, c = omega_coefficients(k)
    x_row = (14 * k + 4, -8 * k + 1, 30 * k + 3, -14 * k - 3)
    rows = _blank(rank)
    for i in range(1, rank - 2):
        row = rows[i - 1]
        if i == 1:
            _set_outer(row, a, b, c, -a + 1)
        elif i % 2 == 0:
            _set_outer(row, *x_row)
        else:
            _set_outer(row, a, b + 1, c, -a + 1)
        if i >= 2:
            row[i] = -1
    _set_outer(rows[rank - 3], a, b + 1, c + 1, -a + 1)
    _set_outer(rows[rank - 2], 46 - 70 * k, -35 + 40 * k, -150 * k + 108, 70 * k - 46)
    _set_outer(rows[rank - 1], 7, -4, 14, -16)
    return IntMatrix.from_rows(rows)


# -- oracle comparison ------------------------------------------------------------

FAMILIES = ("gamma", "phi", "psi", "omega")


def oracle_matrix(family: str, params: dict) -> IntMatrix:
    """Word-product value of a family member."""
    if family == "gamma":
        n, k = params["n"], params["k"]
        return mat_pow(homology_monodromy(gamma_word(n - 2, n)), k)
    if family == "phi":
        n, k = 2 * params["m"], params["k"]
        phi, _ = phi_psi_words(n)
        g = gamma_word(n - 2, n)
        return homology_monodromy(invert(g) ** k * phi * g**k)
    if family == "psi":
        n = 2 * params["m"]
        return homology_monodromy(phi_psi_words(n)[1])
    if family == "omega":
        return homology_monodromy(b_family(2 * params["m"], params["k"]))
    raise ValueError(f"unknown family {family!r}")


def closed_matrix(family: str, params: dict) -> IntMatrix:
    if family == "gamma":
        return gamma_power_closed(params["n"], params["k"])
    if family == "phi":
        return phi_closed(2 * params["m"], params["k"])
    if family == "psi":
        return psi_closed(2 * params["m"])
    if family == "omega":
        return omega_closed(2 * params["m"], params["k"])
    raise ValueError(f"unknown family {family!r}")


@dataclass
class CaseResult:
    params: dict
    equal: bool
    closed: IntMatrix | None = None
    oracle: IntMatrix | None = None
    diff_positions: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"params": dict(self.params), "equal": self.equal, "diff_positions": [list(p) for p in self.diff_positions]}
        if not self.equal:
            out["closed"] = self.closed.to_json()
            out["oracle"] = self.oracle.to_json()
            out["difference"] = (self.closed - self.oracle).to_json()
        return out


@dataclass
class DiscrepancyReport:
    family: str
    cases: list[CaseResult]
    rejected: list[dict] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.cases)

    def mismatches(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.equal]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "cases": [c.to_json() for c in self.cases],
            "rejected": list(self.rejected),
        }


def _rejection(family: str, params: dict) -> str | None:
    if family == "gamma":
        if params["n"] < 4:
            return "the Gamma power closed form is stated for n >= 4"
        return None
    if params["m"] < 3:
        return f"the {family} closed form is stated for m >= 3 (2m >= 6 strands)"
    if params.get("k", 0) < 0:
        return "k must be nonnegative"
    return None


def _run_case(args) -> CaseResult:
    family, params = args
    closed = closed_matrix(family, params)
    oracle = oracle_matrix(family, params)
    diffs = [
        (r, c)
        for r in range(closed.rank)
        for c in range(closed.rank)
        if closed.rows[r][c] != oracle.rows[r][c]
    ]
    return CaseResult(dict(params), not diffs, closed, oracle, diffs)


def _param_grid(family, m_range, k_range, n_range) -> list[dict]:
    if family == "gamma":
        return [{"n": n, "k": k} for n in n_range for k in k_range]
    if family == "psi":
        return [{"m": m} for m in m_range]
    return [{"m": m, "k": k} for m in m_range for k in k_range]


def compare_closed_vs_oracle(
    family: str,
    m_range: Iterable[int] = (),
    k_range: Iterable[int] = (),
    n_range: Iterable[int] = (),
    jobs: int = 1,
) -> DiscrepancyReport:
    """Compare a closed-form family against the word-product oracle.

    ``gamma`` uses ``n_range`` x ``k_range``; ``psi`` uses ``m_range``;
    ``phi`` and ``omega`` use ``m_range`` x ``k_range``. Cases outside the
    published range of a formula are listed under ``rejected``. Cases are
    reported in parameter order whatever ``jobs`` is.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    grid = _param_grid(family, list(m_range), list(k_range), list(n_range))
    accepted, rejected = [], []
    for p in grid:
        reason = _rejection(family, p)
        if reason:
            rejected.append({"params": p, "reason": reason})
        else:
            accepted.append(p)
    tasks = [(family, p) for p in accepted]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cases = list(pool.map(_run_case, tasks))
    else:
        cases = [_run_case(t) for t in tasks]
    return DiscrepancyReport(family, cases, rejected)
