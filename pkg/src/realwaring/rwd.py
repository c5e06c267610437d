"""Real Waring decompositions of length at most the degree.

``decompose`` chooses parameters with the effective selector and solves the
(d+1) x d system for the coefficients; ``decompose_with_params`` does the
same at a caller-supplied point of the admissible parameter set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .binform import BinaryForm, LinearForm, Term, WaringDecomposition, effective_length, verify
from .delta import DeltaCofactors, eval_deltas, nodes_for, point_length
from .errors import DimensionError, MembershipError, NoValidPointError
from .exactnum import RatMatrix, solve_consistent_overdetermined, to_rational
from .params import SelectionTrace, SuitableParams, in_G, wd_parameters


@dataclass(frozen=True)
class RwdResult:
    form: BinaryForm
    decomposition: WaringDecomposition
    params: SuitableParams | None
    r_pair: tuple
    raw_lambda: tuple
    verified: bool

    @property
    def lambdas(self) -> list:
        return self.decomposition.lambdas

    @property
    def effective_length(self) -> int:
        return effective_length(self.decomposition)

    @property
    def delta(self) -> int:
        return self.params.delta if self.params is not None else 0

    def cofactors(self) -> DeltaCofactors:
        return eval_deltas(self.form, self.params.point)


def _build_system(p: BinaryForm, point: Sequence, delta: int, r: Fraction) -> tuple:
    d = p.degree
    nodes = nodes_for(d, point)
    if delta:
        last_col = [r ** k for k in range(d + 1)]
    else:
        last_col = [Fraction(0)] * d + [Fraction(1)]
    rows = [[t ** k for t in nodes] + [last_col[k]] for k in range(d + 1)]
    return nodes, RatMatrix.from_rows(rows)


def _assemble(p: BinaryForm, params: SuitableParams) -> RwdResult:
    delta, r = params.delta, params.last
    nodes, m = _build_system(p, params.point, delta, r)
    lam = solve_consistent_overdetermined(m, p.cbar)
    forms = [LinearForm.x_plus(t) for t in nodes]
    if delta:
        forms.append(LinearForm.x_plus(r))
        r_pair = (Fraction(1), r)
    else:
        forms.append(LinearForm.y())
        r_pair = (Fraction(0), Fraction(1))
    wd = WaringDecomposition(p.degree, tuple(Term(c, f) for c, f in zip(lam, forms)))
    return RwdResult(p, wd, params, r_pair, tuple(lam), verify(wd, p))


def _decompose_linear(p: BinaryForm) -> RwdResult:
    # c-vector of a*y + b*x is (a, b) since binom(1, i) = 1
    a, b = p.cvec
    t, form = LinearForm.normalize(b, a)
    wd = WaringDecomposition(1, (Term(t, form),))
    return RwdResult(p, wd, None, (form.alpha, form.beta), (t,), verify(wd, p))


def decompose(p: BinaryForm) -> RwdResult:
    """Decompose ``p`` as a sum of at most ``deg p`` powers of real linear forms."""
    if p.degree == 1:
        return _decompose_linear(p)
    return _assemble(p, wd_parameters(p))


def decompose_with_params(p: BinaryForm, point: Sequence) -> RwdResult:
    """Decompose at a chosen parameter point.

    The point must lie in G. If Delta_d vanishes there, the last linear form is
    taken to be y instead (only distinct, nonzero nodes are then required).
    """
    point = tuple(to_rational(v) for v in point)
    if p.degree < 2:
        raise DimensionError("parametric decompositions need degree >= 2")
    if len(point) != point_length(p.degree):
        raise DimensionError(
            f"degree {p.degree} needs a point of length {point_length(p.degree)}, got {len(point)}"
        )
    report = in_G(p, point)
    dc = eval_deltas(p, point)
    if dc.d == 0:
        blocking = [r for r in report.reasons if r[0] in "AD"]
        delta, r = 0, Fraction(0)
    else:
        blocking = report.reasons
        delta = 1
        r = -dc.d1 / dc.d
        if p.parity == "even":
            r -= point[0]
    if blocking:
        raise MembershipError(
            f"parameter point {tuple(map(str, point))} is not admissible: " + "; ".join(blocking),
            blocking,
        )
    params = SuitableParams(p.parity, point + (r,), delta, SelectionTrace({}, None))
    return _assemble(p, params)


def search_shorter(p: BinaryForm, grid: Iterable[Sequence],
                   include_algorithm: bool = False) -> RwdResult:
    """Run the parametric decomposition over ``grid`` and keep the shortest.

    Inadmissible points are skipped. Ties go to the earliest point; the
    algorithmic decomposition, if included, competes last.
    """
    best = None
    for point in grid:
        try:
            res = decompose_with_params(p, point)
        except MembershipError:
            continue
        if best is None or res.effective_length < best.effective_length:
            best = res
    if include_algorithm:
        res = decompose(p)
        if best is None or res.effective_length < best.effective_length:
            best = res
    if best is None:
        raise NoValidPointError("no grid point lies in the admissible parameter set")
    return best


@dataclass(frozen=True)
class FamilySampler:
    """Certified evaluator of the parametric family of decompositions of a form.

    Calling it with an admissible point returns the verified decomposition at
    that point. Closed-form coefficients in terms of the parameters are not
    produced.
    """

    form: BinaryForm

    @property
    def point_length(self) -> int:
        return point_length(self.form.degree)

    def admissible(self, point: Sequence) -> bool:
        try:
            decompose_with_params(self.form, point)
        except MembershipError:
            return False
        return True

    def __call__(self, point: Sequence) -> RwdResult:
        return decompose_with_params(self.form, point)


def parametric_family(p: BinaryForm, symbolic: bool = False) -> Callable[[Sequence], RwdResult]:
    if symbolic:
        raise NotImplementedError("symbolic parametric decompositions are not computed; "
                                  "sample the family at rational points instead")
    return FamilySampler(p)
