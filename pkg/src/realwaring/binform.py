"""Binary forms, linear forms and Waring decompositions.

A binary form of degree d is stored by its c-vector (c_0, ..., c_d), i.e.

    p(x, y) = sum_i  binom(d, i) * c_i * x^i * y^(d-i).

The monomial coefficients a_i of x^i y^(d-i) ("raw" coefficients) are only
used at the I/O boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DimensionError, ZeroFormError
from .exactnum import format_rational, to_rational


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    cvec: tuple

    def __post_init__(self):
        cvec = tuple(to_rational(c) for c in self.cvec)
        object.__setattr__(self, "cvec", cvec)
        if self.degree < 1:
            raise DimensionError(f"degree must be positive, got {self.degree}")
        if len(cvec) != self.degree + 1:
            raise DimensionError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(cvec)}"
            )
        if not any(cvec):
            raise ZeroFormError("the zero polynomial is not a valid binary form")

    @classmethod
    def from_cvec(cls, cvec: Sequence) -> "BinaryForm":
        return cls(len(cvec) - 1, tuple(cvec))

    @property
    def parity(self) -> str:
        return "odd" if self.degree % 2 else "even"

    @property
    def cbar(self) -> list:
        """Right-hand side (c_d, ..., c_0) of the decomposition systems."""
        return list(reversed(self.cvec))

    def to_raw_coeffs(self) -> list:
        d = self.degree
        return [comb(d, i) * c for i, c in enumerate(self.cvec)]

    def scale(self, t) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(c * to_rational(t) for c in self.cvec))

    def __str__(self):
        return format_poly(self.to_raw_coeffs())


def from_raw_coeffs(raw: Sequence) -> BinaryForm:
    """Build a form from monomial coefficients ``raw[i]`` of ``x^i y^(d-i)``."""
    raw = [to_rational(a) for a in raw]
    if len(raw) < 2:
        raise DimensionError("need at least two coefficients (degree >= 1)")
    if not any(raw):
        raise ZeroFormError("the zero polynomial is not a valid binary form")
    d = len(raw) - 1
    return BinaryForm(d, tuple(a / comb(d, i) for i, a in enumerate(raw)))


def to_raw_coeffs(form: BinaryForm) -> list:
    return form.to_raw_coeffs()


def forms_equal(a: BinaryForm, b: BinaryForm) -> bool:
    return a.degree == b.degree and a.cvec == b.cvec


@dataclass(frozen=True)
class LinearForm:
    """The linear form alpha*x + beta*y, normalized to alpha = 1 or (0, 1)."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = to_rational(self.alpha), to_rational(self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if not (a == 1 or (a == 0 and b == 1)):
            raise ValueError(f"LinearForm({a}, {b}) is not normalized; use LinearForm.normalize")

    @classmethod
    def normalize(cls, alpha, beta) -> tuple[Fraction, "LinearForm"]:
        """Return ``(t, form)`` with ``alpha*x + beta*y == t * form``."""
        a, b = to_rational(alpha), to_rational(beta)
        if a != 0:
            return a, cls(Fraction(1), b / a)
        if b != 0:
            return b, cls(Fraction(0), Fraction(1))
        raise ZeroFormError("the linear form 0*x + 0*y is not allowed")

    @classmethod
    def x_plus(cls, s) -> "LinearForm":
        return cls(Fraction(1), to_rational(s))

    @classmethod
    def y(cls) -> "LinearForm":
        return cls(Fraction(0), Fraction(1))

    def power_cvec(self, d: int) -> list:
        """c-vector of (alpha*x + beta*y)^d."""
        # binom(d,i) alpha^i beta^(d-i) x^i y^(d-i)  =>  c_i = alpha^i beta^(d-i)
        return [self.alpha ** i * self.beta ** (d - i) for i in range(d + 1)]

    def __str__(self):
        if self.alpha == 0:
            return "y"
        if self.beta == 0:
            return "x"
        sign = "-" if self.beta < 0 else "+"
        mag = abs(self.beta)
        coeff = "" if mag == 1 else f"{format_rational(mag)}*"
        return f"x {sign} {coeff}y"


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    form: LinearForm


@dataclass(frozen=True)
class WaringDecomposition:
    degree: int
    terms: tuple

    def __post_init__(self):
        terms = tuple(Term(to_rational(t[0]), t[1]) if not isinstance(t, Term) else t
                      for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if self.degree < 1:
            raise DimensionError(f"degree must be positive, got {self.degree}")

    @classmethod
    def from_raw_terms(cls, degree: int, raw: Iterable) -> "WaringDecomposition":
        """Build from ``(lambda, alpha, beta)`` triples, normalizing each linear form.

        Proportional forms are merged by summing their rescaled coefficients.
        """
        merged: dict = {}
        for lam, alpha, beta in raw:
            t, form = LinearForm.normalize(alpha, beta)
            merged[form] = merged.get(form, Fraction(0)) + to_rational(lam) * t ** degree
        return cls(degree, tuple(Term(c, f) for f, c in merged.items()))

    @property
    def lambdas(self) -> list:
        return [t.coeff for t in self.terms]

    @property
    def forms(self) -> list:
        return [t.form for t in self.terms]

    def nonzero_terms(self) -> list:
        return [t for t in self.terms if t.coeff != 0]

    def is_nonredundant(self) -> bool:
        forms = [t.form for t in self.nonzero_terms()]
        return len(set(forms)) == len(forms)

    def __str__(self):
        return format_decomposition(self)


def expand_cvec(wd: WaringDecomposition) -> list:
    """Exact c-vector of sum lambda_i * l_i^d; may be all zeros."""
    d = wd.degree
    acc = [Fraction(0)] * (d + 1)
    for term in wd.terms:
        if term.coeff == 0:
            continue
        for i, c in enumerate(term.form.power_cvec(d)):
            acc[i] += term.coeff * c
    return acc


def expand(wd: WaringDecomposition) -> BinaryForm | None:
    """Expand a decomposition back into a binary form.

    Returns ``None`` when the terms cancel to the zero polynomial.
    """
    cvec = expand_cvec(wd)
    if not any(cvec):
        return None
    return BinaryForm(wd.degree, tuple(cvec))


def effective_length(wd: WaringDecomposition) -> int:
    return sum(1 for t in wd.terms if t.coeff != 0)


def verify(wd: WaringDecomposition, form: BinaryForm) -> bool:
    return wd.degree == form.degree and expand_cvec(wd) == list(form.cvec)


def format_poly(raw: Sequence) -> str:
    """Render monomial coefficients (``raw[i]`` on x^i y^(d-i)) in the CLI grammar."""
    d = len(raw) - 1
    parts = []
    for i in range(d, -1, -1):
        a = to_rational(raw[i])
        if a == 0:
            continue
        factors = []
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if d - i:
            factors.append("y" if d - i == 1 else f"y^{d - i}")
        mag = abs(a)
        if mag != 1 or not factors:
            factors.insert(0, format_rational(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def format_decomposition(wd: WaringDecomposition) -> str:
    lines = []
    for t in wd.terms:
        lines.append(f"{format_rational(t.coeff)} * ({t.form})^{wd.degree}")
    return "\n".join(lines)
