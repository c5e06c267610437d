"""Exact rational scalars, small dense matrices and fraction-free elimination.

Scalars are :class:`fractions.Fraction` throughout; it is already canonical
(positive denominator, reduced) and arbitrary precision. Matrices are kept
deliberately small: the algorithms here never need more than a (d+1)x(d+1)
matrix for a binary form of degree d.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, InconsistentSystemError, SingularSystemError

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected, since silently importing binary rounding error would
    defeat the point of exact arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"``, or ``"num"`` when the denominator is 1."""
    return str(Fraction(q))


class RatMatrix:
    """Dense row-major matrix of Fractions. Immutable."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        data = tuple(to_rational(e) for e in entries)
        if len(data) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged row lengths")
        return cls(len(rows), width, (e for r in rows for e in r))

    @property
    def entries(self) -> tuple:
        return self._entries

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self._entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def delete(self, row: int | None = None, col: int | None = None) -> "RatMatrix":
        """Return the submatrix with the given row and/or column removed."""
        keep_r = [i for i in range(self.rows) if i != row]
        keep_c = [j for j in range(self.cols) if j != col]
        return RatMatrix(
            len(keep_r), len(keep_c), (self[i, j] for i in keep_r for j in keep_c)
        )

    def swap_rows(self, a: int, b: int) -> "RatMatrix":
        rows = self.to_rows()
        rows[a], rows[b] = rows[b], rows[a]
        return RatMatrix.from_rows(rows) if rows else self

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.cols:
            raise DimensionError(f"vector of length {len(x)} for {self.cols} columns")
        return [sum((self[i, j] * x[j] for j in range(self.cols)), Fraction(0))
                for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self):
        return f"RatMatrix({self.to_rows()!r})"


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale every row to integers; return the rows and the product of scale factors."""
    out = []
    scale = 1
    for r in rows:
        m = lcm(*(q.denominator for q in r)) if r else 1
        out.append([q.numerator * (m // q.denominator) for q in r])
        scale *= m
    return out, scale


def _bareiss_forward(a: list[list[int]], ncols: int) -> tuple[int, int]:
    """In-place fraction-free elimination of the first ``ncols`` columns.

    Returns ``(sign, rank)``: the row-swap parity and the number of pivots
    found. Stops at the first column without a pivot.
    """
    nrows = len(a)
    width = len(a[0]) if a else 0
    sign = 1
    prev = 1
    for k in range(min(ncols, nrows)):
        piv = next((i for i in range(k, nrows) if a[i][k] != 0), None)
        if piv is None:
            return sign, k
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, nrows):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, width):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign, min(ncols, nrows)


def det_bareiss(m: RatMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination on a common-denominator integer copy."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m.to_rows())
    sign, rank = _bareiss_forward(a, n)
    if rank < n:
        return Fraction(0)
    return Fraction(sign * a[n - 1][n - 1], scale)


def det_laplace(m: RatMatrix, max_dim: int = 7) -> Fraction:
    """Determinant by the Leibniz/cofactor expansion. Test oracle only."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows > max_dim:
        raise DimensionError(f"refusing cofactor expansion of a {m.rows}x{m.rows} matrix "
                             f"(limit {max_dim})")
    return _laplace(m.to_rows())


def _laplace(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, a0j in enumerate(rows[0]):
        if a0j == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a0j * _laplace(minor)
        total += term if j % 2 == 0 else -term
    return total


def det_leibniz(m: RatMatrix) -> Fraction:
    """Permutation-sum determinant; a second, structurally different oracle."""
    n = m.rows
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= m[i, j]
            if prod == 0:
                break
        total += -prod if inv % 2 else prod
    return total


def solve_consistent_overdetermined(m: RatMatrix, rhs: Sequence) -> list[Fraction]:
    """Solve an (n+1) x n system that is expected to have rank n and be consistent.

    The whole augmented matrix is eliminated fraction-free; the single row left
    without a pivot must reduce to zero, otherwise the system is inconsistent.
    """
    n = m.cols
    if m.rows != n + 1:
        raise DimensionError(f"expected an (n+1)xn system, got {m.rows}x{m.cols}")
    if len(rhs) != m.rows:
        raise DimensionError(f"right-hand side has {len(rhs)} entries, expected {m.rows}")
    aug = [m.row(i) + [to_rational(rhs[i])] for i in range(m.rows)]
    a, _ = _integer_rows(aug)
    _, rank = _bareiss_forward(a, n)
    if rank < n:
        raise SingularSystemError(f"coefficient matrix has rank {rank} < {n}")
    if a[n][n] != 0:
        raise InconsistentSystemError("leftover equation has a nonzero residual")
    x = [Fraction(0)] * n
    for k in reversed(range(n)):
        acc = Fraction(a[k][n])
        for j in range(k + 1, n):
            acc -= a[k][j] * x[j]
        x[k] = acc / a[k][k]
    return x


# Univariate polynomials are coefficient lists, lowest degree first, trimmed.

def poly_trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_eval(coeffs: Sequence[Fraction], t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def poly_add(a: Sequence, b: Sequence) -> tuple[Fraction, ...]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return poly_trim([x + y for x, y in zip(a, b)])


def poly_scale(a: Sequence, c) -> tuple[Fraction, ...]:
    return poly_trim([x * c for x in a])


def poly_mul(a: Sequence, b: Sequence) -> tuple[Fraction, ...]:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def max_abs_coeff(coeffs: Sequence[Fraction]) -> Fraction:
    """Largest absolute coefficient; 0 for the zero polynomial."""
    return max((abs(c) for c in coeffs), default=Fraction(0))


def interpolate(xs: Sequence, ys: Sequence) -> tuple[Fraction, ...]:
    """Exact interpolating polynomial through ``(xs[k], ys[k])`` via Newton divided differences."""
    if len(xs) != len(ys):
        raise DimensionError("xs and ys differ in length")
    xs = [to_rational(x) for x in xs]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    dd = [to_rational(y) for y in ys]
    n = len(xs)
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level])
    # Horner-style expansion of the Newton form into monomial coefficients
    coeffs: list[Fraction] = []
    for k in range(n - 1, -1, -1):
        # coeffs <- coeffs * (T - xs[k]) + dd[k]
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= c * xs[k]
        if shifted:
            shifted[0] += dd[k]
        coeffs = shifted
    return poly_trim(coeffs)
