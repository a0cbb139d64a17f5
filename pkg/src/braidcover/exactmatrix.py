"""Dense square matrices over the integers.

Entries are Python ints end to end. Determinants use fraction-free
elimination and characteristic polynomials use the division-free Berkowitz
recurrence, so no floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from braidcover import _backend
from braidcover.errors import NotInvertibleError, RankMismatchError
from braidcover.laurent import LaurentPoly

__all__ = ["IntMatrix", "mat_mul", "mat_pow", "det", "char_poly", "inverse"]


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise ValueError("matrices must have rank >= 1")
        for r in self.rows:
            if len(r) != n:
                raise ValueError("matrix is not square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, rank: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)))

    @classmethod
    def zero(cls, rank: int) -> IntMatrix:
        return cls(tuple((0,) * rank for _ in range(rank)))

    @property
    def rank(self) -> int:
        """Number of rows (this is the size of the matrix, not its linear rank)."""
        return len(self.rows)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.rank))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.rank != other.rank:
            raise RankMismatchError(f"ranks {self.rank} and {other.rank} differ")
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.rank != other.rank:
            raise RankMismatchError(f"ranks {self.rank} and {other.rank} differ")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __str__(self):
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.rows)

    def to_json(self) -> dict:
        return {"rank": self.rank, "rows": [[str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping) -> IntMatrix:
        m = cls.from_rows([[int(x) for x in r] for r in data["rows"]])
        if m.rank != data["rank"]:
            raise ValueError("rank field disagrees with rows")
        return m


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rank != b.rank:
        raise RankMismatchError(f"ranks {a.rank} and {b.rank} differ")
    cols = list(zip(*b.rows))
    return IntMatrix(tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a.rows))


def det(a: IntMatrix) -> int:
    return _backend.bareiss_det(a.rows)


def inverse(a: IntMatrix) -> IntMatrix:
    """Integer inverse of a unimodular matrix."""
    d = det(a)
    if d not in (1, -1):
        raise NotInvertibleError(f"determinant {d} is not a unit")
    n = a.rank
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        vals = row[n:]
        # unimodular inverses are integral
        assert all(v.denominator == 1 for v in vals)
        out.append(tuple(int(v) for v in vals))
    return IntMatrix(tuple(out))


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    if k < 0:
        a = inverse(a)
        k = -k
    result = IntMatrix.identity(a.rank)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def char_poly(a: IntMatrix | Sequence[Sequence[int]], variable: str = "t") -> LaurentPoly:
    """Monic ``det(tI - a)``."""
    rows = a.rows if isinstance(a, IntMatrix) else a
    coeffs = _backend.berkowitz(rows, 0, 1)
    return LaurentPoly.from_coeffs(reversed(coeffs), 0, variable)
