"""Topological invariants of smooth complete intersections.

X_n(d_1, ..., d_r) is the transverse intersection of r hypersurfaces of the
given degrees in complex projective (n+r)-space; its real dimension is 2n.
All invariants are computed from the multiplicative structure of the stable
tangent bundle: (n+r+1) hyperplane line factors divided by one factor per
defining degree.  Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import TruncatedSeries, genus_line_factor

MAX_DEGREE = 10**6
MAX_FACTORS = 64


class ParityError(ValueError):
    """Raised when an invariant of 4k-dimensional manifolds is requested in
    the wrong parity."""


@dataclass(frozen=True)
class CompleteIntersection:
    """A complete intersection of complex dimension n and multidegree
    (d_1, ..., d_r), degrees sorted ascending."""

    n: int
    degrees: tuple[int, ...]

    def __init__(self, n: int, degrees) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError("complex dimension n must be a positive integer")
        raw = tuple(degrees)
        if not raw:
            raise ValueError("at least one degree is required")
        if len(raw) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} degrees are supported")
        for d in raw:
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise ValueError("degrees must be positive integers")
            if d > MAX_DEGREE:
                raise ValueError(f"degrees above {MAX_DEGREE} are not supported")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "degrees", tuple(sorted(raw)))

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def ambient_lines(self) -> int:
        """Number of hyperplane line factors of the ambient restriction."""
        return self.n + self.r + 1

    def __repr__(self) -> str:
        return f"X_{self.n}({', '.join(str(d) for d in self.degrees)})"


def normalize(ci: CompleteIntersection) -> CompleteIntersection:
    """Drop degree-1 factors (a degree-1 hypersurface is a hyperplane, so it
    only lowers the ambient dimension).  The empty result is the degree-(1)
    projective space itself."""
    ds = tuple(d for d in ci.degrees if d != 1)
    if not ds:
        ds = (1,)
    return CompleteIntersection(ci.n, ds)


def degree_product(ci: CompleteIntersection) -> int:
    t = 1
    for d in ci.degrees:
        t *= d
    return t


def evaluate_top(ci: CompleteIntersection, f: TruncatedSeries) -> Fraction:
    """Evaluate a degree-2n cohomology expression on the fundamental class:
    the x^n coefficient times the hyperplane self-intersection number
    t = d_1 * ... * d_r."""
    if f.order < ci.n:
        raise ValueError(
            f"series truncated at order {f.order} cannot be evaluated in"
            f" dimension n = {ci.n}"
        )
    return degree_product(ci) * f.coefficient(ci.n)


def _virtual_genus_series(ci: CompleteIntersection, kind: str) -> TruncatedSeries:
    """Genus series of the stable tangent bundle: ambient line factors over
    the factors of the defining degrees."""
    order = ci.n
    total = genus_line_factor(kind, 1, order) ** ci.ambient_lines
    for d in ci.degrees:
        total = total * genus_line_factor(kind, d, order).inverse()
    return total


def chern_series(ci: CompleteIntersection) -> TruncatedSeries:
    """Total Chern class, as a series in the hyperplane class x."""
    return _virtual_genus_series(ci, "chern")


def pontrjagin_coeff(ci: CompleteIntersection) -> int:
    """rho with p_1 = rho * x^2."""
    return ci.ambient_lines - sum(d * d for d in ci.degrees)


def c1_coeff(ci: CompleteIntersection) -> int:
    """Coefficient of the first Chern class with respect to x."""
    return ci.ambient_lines - sum(ci.degrees)


def euler_characteristic(ci: CompleteIntersection) -> int:
    chi = evaluate_top(ci, chern_series(ci))
    assert chi.denominator == 1
    return int(chi)


def signature(ci: CompleteIntersection) -> int:
    """Signature of the intersection form, for even complex dimension."""
    if ci.n % 2:
        raise ParityError(
            "the signature lives in dimensions divisible by 4; n must be even"
        )
    sigma = evaluate_top(ci, _virtual_genus_series(ci, "l_genus"))
    assert sigma.denominator == 1
    return int(sigma)


def a_hat_genus(ci: CompleteIntersection) -> Fraction:
    """The A-hat genus, for even complex dimension.  Rational in general;
    an integer on spin manifolds."""
    if ci.n % 2:
        raise ParityError("the A-hat genus requires even complex dimension n")
    return evaluate_top(ci, _virtual_genus_series(ci, "a_hat"))


def is_spin(ci: CompleteIntersection) -> bool:
    """Spin iff the first Chern class is even."""
    return c1_coeff(ci) % 2 == 0


@dataclass(frozen=True)
class InvariantReport:
    ci: CompleteIntersection
    t: int
    c1_coeff: int
    rho: int
    euler: int
    spin: bool
    signature: Optional[int]
    a_hat: Optional[Fraction]
    b3: Optional[int]


def invariants(ci: CompleteIntersection) -> InvariantReport:
    """All implemented invariants in one report.  signature and a_hat are
    present only for even n; b3 only for n = 3, where the even Betti numbers
    are 1, 1, 1, 1 and so b3 = 4 - euler."""
    chi = euler_characteristic(ci)
    even = ci.n % 2 == 0
    return InvariantReport(
        ci=ci,
        t=degree_product(ci),
        c1_coeff=c1_coeff(ci),
        rho=pontrjagin_coeff(ci),
        euler=chi,
        spin=is_spin(ci),
        signature=signature(ci) if even else None,
        a_hat=a_hat_genus(ci) if even else None,
        b3=(4 - chi) if ci.n == 3 else None,
    )
