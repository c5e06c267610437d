"""Effective choice of suitable parameters and the admissibility predicates.

``wd_parameters_odd`` / ``wd_parameters_even`` fix the first parameters to
1, 2, ..., v-1 and pick the remaining free one as 2m+1, where m bounds the
coefficients of a handful of univariate polynomials built from Delta_d and
Delta_{d-1}. The bounds are taken literally from the raw (non-monic)
coefficients; the choice is then re-checked exactly and, if a guard
vanishes, the free value is pushed further out (s -> 2s+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .binform import BinaryForm
from .delta import DeltaRestriction, eval_deltas, nu_of, point_length, restrict_deltas
from .errors import DimensionError, ParityError, WaringError
from .exactnum import max_abs_coeff, poly_add, poly_mul, poly_scale, to_rational

MAX_ESCALATIONS = 64


@dataclass
class CheckReport:
    ok: bool
    reasons: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    @classmethod
    def from_reasons(cls, reasons):
        return cls(not reasons, list(reasons))


@dataclass(frozen=True)
class SelectionTrace:
    bounds: dict
    m: Fraction
    psi_checks: tuple = ()
    escalations: int = 0


@dataclass(frozen=True)
class SuitableParams:
    parity: str
    s: tuple
    delta: int
    trace: SelectionTrace

    @property
    def point(self) -> tuple:
        """The parameter point, i.e. ``s`` without its last slot."""
        return self.s[:-1]

    @property
    def last(self) -> Fraction:
        return self.s[-1]


# ---------------------------------------------------------------- selection

def _combo(restr: DeltaRestriction, shift: tuple) -> tuple:
    """Delta_{d-1}(T) + (a + b*T) * Delta_d(T) for ``shift = (a, b)``."""
    a, b = shift
    return poly_add(restr.poly_d1, poly_mul((Fraction(a), Fraction(b)), restr.poly_d))


def _bound_polys(restr: DeltaRestriction, nu: int) -> dict:
    prefix = restr.fixed_prefix
    polys = {"delta_d": restr.poly_d}
    if restr.parity == "odd":
        polys["delta_{d-1,0}^+"] = _combo(restr, (0, -1))
        polys["delta_{d-1,0}^-"] = _combo(restr, (0, 1))
        for i, si in enumerate(prefix, 1):
            polys[f"delta_{{d-1,{i}}}^+"] = _combo(restr, (-si, 0))
            polys[f"delta_{{d-1,{i}}}^-"] = _combo(restr, (si, 0))
    else:
        polys["delta_{d-1,0}^-"] = _combo(restr, (0, 2))
        for i, si in enumerate(prefix, 1):
            # Delta_{d-1} - (S + s_i) Delta_d  and  Delta_{d-1} + (S - s_i) Delta_d
            polys[f"delta_{{d-1,{i}}}^+"] = _combo(restr, (-si, -1))
            polys[f"delta_{{d-1,{i}}}^-"] = _combo(restr, (-si, 1))
    return polys


def _guards(restr: DeltaRestriction, t: Fraction) -> tuple[Fraction, list]:
    """R at free value ``t`` plus the labelled values that must all be nonzero."""
    dd, dd1 = restr.at(t)
    checks = [("Delta_d", dd)]
    if dd == 0:
        return None, checks
    prefix = restr.fixed_prefix
    if restr.parity == "odd":
        r = -dd1 / dd
        # R must avoid every node +-s_i and +-t
        for label, si in [("0", t)] + [(str(i), s) for i, s in enumerate(prefix, 1)]:
            checks.append((f"psi_{label},+", dd1 + si * dd))
            checks.append((f"psi_{label},-", dd1 - si * dd))
    else:
        r = -dd1 / dd - t
        # R must avoid the nodes t, +-s_i
        checks.append(("psi_0,+", dd1 + 2 * t * dd))
        for i, si in enumerate(prefix, 1):
            checks.append((f"psi_{i},+", dd1 + (t + si) * dd))
            checks.append((f"psi_{i},-", dd1 + (t - si) * dd))
    return r, checks


def _select(p: BinaryForm, parity: str) -> SuitableParams:
    if parity != p.parity:
        raise ParityError(f"degree {p.degree} form passed to the {parity}-degree selector")
    if p.degree < 2:
        raise DimensionError("parameter selection needs degree >= 2")
    nu = nu_of(p.degree)
    restr = restrict_deltas(p, parity)
    floor = Fraction(nu - 1)

    if restr.d_is_zero:
        bounds = {"delta_{d-1}": max_abs_coeff(restr.poly_d1)}
        m = max([floor, *bounds.values()])
        t = 2 * m + 1
        trace = SelectionTrace(bounds, m)
        return SuitableParams(parity, tuple(restr.point(t)) + (Fraction(0),), 0, trace)

    bounds = {k: max_abs_coeff(v) for k, v in _bound_polys(restr, nu).items()}
    m = max([floor, *bounds.values()])
    t = 2 * m + 1
    escalations = 0
    while True:
        r, checks = _guards(restr, t)
        if all(v != 0 for _, v in checks):
            break
        escalations += 1
        if escalations > MAX_ESCALATIONS:
            raise WaringError("parameter selection did not stabilise; guards keep vanishing")
        t = 2 * t + 1
    trace = SelectionTrace(bounds, m, tuple(checks), escalations)
    return SuitableParams(parity, tuple(restr.point(t)) + (r,), 1, trace)


def wd_parameters_odd(p: BinaryForm) -> SuitableParams:
    return _select(p, "odd")


def wd_parameters_even(p: BinaryForm) -> SuitableParams:
    return _select(p, "even")


def wd_parameters(p: BinaryForm) -> SuitableParams:
    return _select(p, p.parity)


# --------------------------------------------------------------- predicates

def _check_parity(p: BinaryForm, parity: str | None) -> str:
    parity = parity or p.parity
    if parity != p.parity:
        raise ParityError(f"degree {p.degree} form is not {parity}")
    return parity


def _pair_clashes(values: Sequence, names: Sequence) -> list:
    out = []
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] == values[j]:
                out.append(f"{names[i]} = {names[j]}")
            elif values[i] == -values[j]:
                out.append(f"{names[i]} = -{names[j]}")
    return out


def expected_last(p: BinaryForm, point: Sequence) -> tuple[Fraction, "object"]:
    """The value the last slot of a suitable vector must take at ``point``."""
    dc = eval_deltas(p, point)
    if dc.d == 0:
        return Fraction(0), dc
    r = -dc.d1 / dc.d
    if p.parity == "even":
        r -= to_rational(point[0])
    return r, dc


def is_suitable(p: BinaryForm, s: Sequence, parity: str | None = None,
                strict: bool = False) -> CheckReport:
    """Check a full vector (point..., last) against the suitability conditions.

    ``strict`` only matters for even degree: it additionally forbids s* = 0 and
    s* = -last, as the verbatim definition does.
    """
    parity = _check_parity(p, parity)
    s = [to_rational(v) for v in s]
    nu = point_length(p.degree)
    if len(s) != nu + 1:
        raise DimensionError(f"suitable vector must have length {nu + 1}, got {len(s)}")
    point, last = s[:-1], s[-1]
    reasons = []
    if parity == "odd":
        pairs, names = point, [f"s_{i}" for i in range(1, nu + 1)]
        star = None
    else:
        star, pairs = point[0], point[1:]
        names = [f"s_{i}" for i in range(1, nu)]

    for v, name in zip(pairs, names):
        if v == 0:
            reasons.append(f"{name} = 0")
    reasons += _pair_clashes(pairs, names)
    if star is not None:
        if strict and star == 0:
            reasons.append("s* = 0")
        for v, name in zip(pairs, names):
            if v == star:
                reasons.append(f"{name} = s*")
            elif v == -star:
                reasons.append(f"{name} = -s*")

    want, dc = expected_last(p, point)
    if last != want:
        if dc.d != 0:
            reasons.append(f"last slot {last} != R = {want}")
        else:
            reasons.append(f"last slot {last} != 0 although Delta_d = 0")
    elif dc.d != 0:
        # the last slot is a node here: it must differ from all other nodes
        for v, name in zip(pairs, names):
            if last == v:
                reasons.append(f"R = {name}")
            elif last == -v:
                reasons.append(f"R = -{name}")
        if star is not None:
            if last == star:
                reasons.append("R = s*")
            elif strict and last == -star:
                reasons.append("R = -s*")
    return CheckReport.from_reasons(reasons)


def in_G(p: BinaryForm, point: Sequence, parity: str | None = None) -> CheckReport:
    """Membership of a parameter point in the open set G = Omega minus (A u B u D).

    Reasons are prefixed by the offending set: ``Omega:``, ``A:``, ``B:``, ``D:``.
    """
    parity = _check_parity(p, parity)
    point = [to_rational(v) for v in point]
    nu = point_length(p.degree)
    if len(point) != nu:
        raise DimensionError(f"parameter point must have length {nu}, got {len(point)}")
    dc = eval_deltas(p, point)
    dd, dd1 = dc.d, dc.d1
    reasons = []
    if dd == 0:
        reasons.append("Omega: Delta_d = 0")
    if parity == "odd":
        pairs = point
        names = [f"s_{i}" for i in range(1, nu + 1)]
    else:
        star, pairs = point[0], point[1:]
        names = [f"s_{i}" for i in range(1, nu)]
    for v, name in zip(pairs, names):
        if v == 0:
            reasons.append(f"A: {name} = 0")
    if parity == "odd":
        for v, name in zip(pairs, names):
            if dd1 + v * dd == 0:
                reasons.append(f"B: Delta_(d-1) + {name} Delta_d = 0")
            if dd1 - v * dd == 0:
                reasons.append(f"B: Delta_(d-1) - {name} Delta_d = 0")
    else:
        if dd1 + 2 * star * dd == 0:
            reasons.append("B: Delta_(d-1) + 2 s Delta_d = 0")
        for v, name in zip(pairs, names):
            if dd1 + (star + v) * dd == 0:
                reasons.append(f"B: Delta_(d-1) + (s + {name}) Delta_d = 0")
            if dd1 + (star - v) * dd == 0:
                reasons.append(f"B: Delta_(d-1) + (s - {name}) Delta_d = 0")
    reasons += [f"D: {r}" for r in _pair_clashes(pairs, names)]
    if parity == "even":
        for v, name in zip(pairs, names):
            if v == star or v == -star:
                reasons.append(f"D: s {'-' if v == star else '+'} {name} = 0")
    return CheckReport.from_reasons(reasons)
