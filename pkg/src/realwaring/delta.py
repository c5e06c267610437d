"""Cofactors Delta_0..Delta_d of the bordered Vandermonde-type matrix V.

For a parameter point the matrix V has a first column of indeterminates
X_0..X_d, then one column (t^0, ..., t^d) per node t, then the column
(c_d, ..., c_0). Its determinant is sum_i Delta_i X_i, so Delta_i is the
signed minor obtained by deleting row i and the X column. The X column is
never built.

Node layout per parity:
    odd  d = 2v+1, point (s_1, ..., s_v):        nodes s_1, -s_1, ..., s_v, -s_v
    even d = 2v,   point (s, s_1, ..., s_{v-1}):  nodes s, s_1, -s_1, ..., s_{v-1}, -s_{v-1}
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .binform import BinaryForm
from .errors import DimensionError
from .exactnum import RatMatrix, det_bareiss, interpolate, poly_eval, to_rational


def nu_of(degree: int) -> int:
    return degree // 2


def point_length(degree: int) -> int:
    """Number of free parameters: (d-1)/2 for odd d, d/2 for even d."""
    return (degree - 1) // 2 if degree % 2 else degree // 2


def nodes_for(degree: int, point: Sequence) -> list[Fraction]:
    point = [to_rational(s) for s in point]
    if len(point) != point_length(degree):
        raise DimensionError(
            f"degree {degree} needs a parameter point of length {point_length(degree)}, "
            f"got {len(point)}"
        )
    if degree % 2:
        pairs = point
        head = []
    else:
        head, pairs = point[:1], point[1:]
    out = list(head)
    for s in pairs:
        out += [s, -s]
    return out


def bordered_matrix(p: BinaryForm, point: Sequence) -> RatMatrix:
    """The (d+1) x d matrix [node columns | cbar]; V without its X column."""
    d = p.degree
    nodes = nodes_for(d, point)
    cbar = p.cbar
    rows = [[t ** k for t in nodes] + [cbar[k]] for k in range(d + 1)]
    return RatMatrix.from_rows(rows)


def _signed_minor(n: RatMatrix, i: int) -> Fraction:
    value = det_bareiss(n.delete(row=i))
    return -value if i % 2 else value


@dataclass(frozen=True)
class DeltaCofactors:
    parity: str
    values: tuple

    def __getitem__(self, i):
        return self.values[i]

    @property
    def d(self) -> Fraction:
        """Delta_d, the leading cofactor."""
        return self.values[-1]

    @property
    def d1(self) -> Fraction:
        """Delta_{d-1}."""
        return self.values[-2]


def eval_deltas(p: BinaryForm, point: Sequence) -> DeltaCofactors:
    n = bordered_matrix(p, point)
    values = tuple(_signed_minor(n, i) for i in range(p.degree + 1))
    return DeltaCofactors(p.parity, values)


def eval_top_deltas(p: BinaryForm, point: Sequence) -> tuple[Fraction, Fraction]:
    """Only (Delta_d, Delta_{d-1}); two determinants instead of d+1."""
    n = bordered_matrix(p, point)
    d = p.degree
    return _signed_minor(n, d), _signed_minor(n, d - 1)


def h_star(dc: DeltaCofactors, t) -> Fraction:
    """sum_i Delta_i * t^i."""
    return poly_eval(dc.values, to_rational(t))


@dataclass(frozen=True)
class DeltaRestriction:
    """Delta_d and Delta_{d-1} as polynomials in the single free parameter T.

    The other parameters are fixed to 1, 2, ..., v-1. ``poly_d``/``poly_d1``
    are coefficient tuples, lowest degree first, trimmed (``()`` is zero).
    """

    parity: str
    fixed_prefix: tuple
    poly_d: tuple
    poly_d1: tuple

    def point(self, t) -> list[Fraction]:
        """Full parameter point with the free slot set to ``t``."""
        t = to_rational(t)
        if self.parity == "odd":
            return list(self.fixed_prefix) + [t]
        return [t] + list(self.fixed_prefix)

    @property
    def d_is_zero(self) -> bool:
        return not self.poly_d

    def at(self, t) -> tuple[Fraction, Fraction]:
        t = to_rational(t)
        return poly_eval(self.poly_d, t), poly_eval(self.poly_d1, t)


def degree_bound(degree: int) -> int:
    return degree * (degree + 1) // 2


def restrict_deltas(p: BinaryForm, parity: str | None = None) -> DeltaRestriction:
    parity = parity or p.parity
    if parity != p.parity:
        raise DimensionError(f"form of degree {p.degree} is not {parity}")
    d = p.degree
    nu = nu_of(d)
    prefix = tuple(Fraction(i) for i in range(1, nu))
    free_first = parity == "even"
    ts = list(range(degree_bound(d) + 1))
    top, sub = [], []
    for t in ts:
        point = [Fraction(t), *prefix] if free_first else [*prefix, Fraction(t)]
        dd, dd1 = eval_top_deltas(p, point)
        top.append(dd)
        sub.append(dd1)
    return DeltaRestriction(parity, prefix, interpolate(ts, top), interpolate(ts, sub))
