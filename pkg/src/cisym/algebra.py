"""Exact arithmetic kernels: truncated power series, polynomials in the lift
parameter, and Laurent rational functions of the circle parameter.

Everything is carried by integers and `fractions.Fraction`; floats are
rejected at the boundary.  All normal forms are canonical so that equality is
structural and output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Raised when two truncated series of different truncation order meet."""


class NonUnitError(ValueError):
    """Raised when inverting a series whose constant term vanishes."""


def as_rational(value: Scalar) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting floats outright."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact arithmetic only, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# Truncated power series


class TruncatedSeries:
    """A formal power series sum_k c_k x^k known through x^order.

    Coefficients are exact rationals.  Arithmetic requires matching orders;
    there is no implicit re-truncation.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [as_rational(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, [1])

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, [])

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient x^{k} outside truncation order {self.order}")
        return self.coeffs[k]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(n, out)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a nonnegative integer")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse, by triangular solve on the Cauchy product."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitError("series with zero constant term has no inverse")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv[k] = -acc / c0
        return TruncatedSeries(n, inv)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


def series_product(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


GENUS_KINDS = ("chern", "pontrjagin", "a_hat", "l_genus")


def genus_line_factor(kind: str, scale: int, order: int) -> TruncatedSeries:
    """The multiplicative one-line factor of a genus, at line weight `scale`.

    chern       1 + d*x
    pontrjagin  1 + d^2*x^2
    a_hat       (d*x/2) / sinh(d*x/2)
    l_genus     d*x / tanh(d*x)

    The last two are even series with exact rational coefficients; at d = 0
    they degenerate to 1.
    """
    if not isinstance(scale, int) or isinstance(scale, bool):
        raise TypeError("scale must be an integer")
    d = scale
    if kind == "chern":
        if order == 0:
            return TruncatedSeries.one(0)
        return TruncatedSeries(order, [1, d])
    if kind == "pontrjagin":
        if order < 2:
            return TruncatedSeries.one(order)
        return TruncatedSeries(order, [1, 0, d * d])
    if kind == "a_hat":
        # sinh(u)/u at u = d*x/2, then invert.
        sinh_over = [Fraction(0)] * (order + 1)
        for k in range(0, order // 2 + 1):
            sinh_over[2 * k] = Fraction(d ** (2 * k), 4**k * factorial(2 * k + 1))
        return TruncatedSeries(order, sinh_over).inverse()
    if kind == "l_genus":
        # u/tanh(u) = cosh(u) / (sinh(u)/u) at u = d*x.
        cosh = [Fraction(0)] * (order + 1)
        sinh_over = [Fraction(0)] * (order + 1)
        for k in range(0, order // 2 + 1):
            cosh[2 * k] = Fraction(d ** (2 * k), factorial(2 * k))
            sinh_over[2 * k] = Fraction(d ** (2 * k), factorial(2 * k + 1))
        return TruncatedSeries(order, cosh) * TruncatedSeries(order, sinh_over).inverse()
    raise ValueError(f"unknown genus kind {kind!r}; expected one of {GENUS_KINDS}")


# ---------------------------------------------------------------------------
# Polynomials in the lift parameter l


class LiftPolynomial:
    """A polynomial in the lift parameter l with exact rational coefficients.

    Stored low-to-high with trailing zeros trimmed; the zero polynomial has an
    empty coefficient tuple, so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LiftPolynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "LiftPolynomial":
        return cls([c])

    @classmethod
    def shifted_lift(cls, a: Scalar) -> "LiftPolynomial":
        """The linear polynomial a + l."""
        return cls([a, 1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def constant_value(self) -> Optional[Fraction]:
        """The value of a constant polynomial, None if degree > 0."""
        if self.degree > 0:
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, value: Scalar) -> Fraction:
        v = as_rational(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __add__(self, other: "LiftPolynomial") -> "LiftPolynomial":
        if not isinstance(other, LiftPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LiftPolynomial(out)

    def __sub__(self, other: "LiftPolynomial") -> "LiftPolynomial":
        if not isinstance(other, LiftPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LiftPolynomial":
        return LiftPolynomial([-c for c in self.coeffs])

    def __mul__(self, other: Union["LiftPolynomial", Scalar]) -> "LiftPolynomial":
        if isinstance(other, LiftPolynomial):
            if self.is_zero() or other.is_zero():
                return LiftPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b != 0:
                        out[i + j] += a * b
            return LiftPolynomial(out)
        scalar = as_rational(other)
        return LiftPolynomial([scalar * c for c in self.coeffs])

    def __rmul__(self, other: Scalar) -> "LiftPolynomial":
        return self * other

    def __pow__(self, exponent: int) -> "LiftPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = LiftPolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LiftPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("l" if c == 1 else f"{c}*l")
            else:
                terms.append(f"l^{k}" if c == 1 else f"{c}*l^{k}")
        return " + ".join(terms)


def lift_poly_equal(p: LiftPolynomial, q: LiftPolynomial) -> bool:
    return p == q


# ---------------------------------------------------------------------------
# Integer Laurent-polynomial helpers (internal to CharacterFunction)


def _trim(cs: Sequence[int]) -> tuple[int, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return _trim(out)


def _pscale(a: Sequence[int], s: int) -> tuple[int, ...]:
    if s == 0:
        return ()
    return _trim([s * c for c in a])


def _valuation(a: Sequence[int]) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    return 0


def _content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g


class CharacterFunction:
    """A rational function of the circle parameter, num/den with integer
    Laurent-polynomial numerator and denominator.

    Canonical form: the common power of the variable is factored out so both
    parts are ordinary polynomials with at least one nonzero constant term,
    the joint integer content is divided away, and the sign is fixed by
    making the denominator's lowest nonzero coefficient positive.  Equality
    and constancy are decided by exact cross-multiplication, never by
    sampling.
    """

    __slots__ = ("num", "den")

    def __init__(
        self,
        num: Sequence[int],
        den: Sequence[int],
        *,
        num_shift: int = 0,
        den_shift: int = 0,
    ):
        for c in tuple(num) + tuple(den):
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("character coefficients must be integers")
        n = _trim(num)
        d = _trim(den)
        if not d:
            raise ZeroDivisionError("character function with zero denominator")
        if not n:
            object.__setattr__(self, "num", ())
            object.__setattr__(self, "den", (1,))
            return
        # Shift both parts to a common valuation zero.
        nval = _valuation(n) + num_shift
        dval = _valuation(d) + den_shift
        n = n[_valuation(n):]
        d = d[_valuation(d):]
        lead = min(nval, dval)
        n = (0,) * (nval - lead) + n
        d = (0,) * (dval - lead) + d
        g = gcd(_content(n), _content(d))
        if g > 1:
            n = tuple(c // g for c in n)
            d = tuple(c // g for c in d)
        if d[_valuation(d)] < 0:
            n = tuple(-c for c in n)
            d = tuple(-c for c in d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("CharacterFunction is immutable")

    @classmethod
    def zero(cls) -> "CharacterFunction":
        return cls((), (1,))

    @classmethod
    def constant(cls, c: Scalar) -> "CharacterFunction":
        f = as_rational(c)
        return cls((f.numerator,), (f.denominator,))

    @classmethod
    def from_laurent(
        cls, num: dict[int, int], den: dict[int, int]
    ) -> "CharacterFunction":
        """Build from {power: coefficient} maps, powers possibly negative."""

        def to_poly(m: dict[int, int]) -> tuple[tuple[int, ...], int]:
            if not m:
                return (), 0
            lo = min(m)
            hi = max(m)
            cs = [0] * (hi - lo + 1)
            for p, c in m.items():
                cs[p - lo] = c
            return tuple(cs), lo

        n, ns = to_poly(num)
        d, ds = to_poly(den)
        return cls(n, d, num_shift=ns, den_shift=ds)

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "CharacterFunction") -> "CharacterFunction":
        if not isinstance(other, CharacterFunction):
            return NotImplemented
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return CharacterFunction(num, _pmul(self.den, other.den))

    def __sub__(self, other: "CharacterFunction") -> "CharacterFunction":
        if not isinstance(other, CharacterFunction):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "CharacterFunction":
        return CharacterFunction(_pscale(self.num, -1), self.den)

    def __mul__(self, other: Union["CharacterFunction", int]) -> "CharacterFunction":
        if isinstance(other, CharacterFunction):
            return CharacterFunction(
                _pmul(self.num, other.num), _pmul(self.den, other.den)
            )
        if isinstance(other, int) and not isinstance(other, bool):
            return CharacterFunction(_pscale(self.num, other), self.den)
        return NotImplemented

    def __rmul__(self, other: int) -> "CharacterFunction":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterFunction):
            return NotImplemented
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    __hash__ = None  # type: ignore[assignment]

    def is_constant(self) -> Optional[Fraction]:
        """The constant value if num = c * den as Laurent polynomials, else None."""
        if not self.num:
            return Fraction(0)
        k = _valuation(self.den)
        p, q = self.num[k] if k < len(self.num) else 0, self.den[k]
        # num * q == den * p, checked coefficientwise in integers.
        width = max(len(self.num), len(self.den))
        for i in range(width):
            a = self.num[i] if i < len(self.num) else 0
            b = self.den[i] if i < len(self.den) else 0
            if a * q != b * p:
                return None
        return Fraction(p, q)

    def limit_at_infinity(self) -> Optional[Fraction]:
        """The limit as the circle parameter grows without bound.

        Degree comparison of numerator and denominator: smaller degree gives
        0, equal degrees give the leading-coefficient ratio, larger degree
        diverges (None).
        """
        if not self.num:
            return Fraction(0)
        dn = len(self.num) - 1
        dd = len(self.den) - 1
        if dn < dd:
            return Fraction(0)
        if dn == dd:
            return Fraction(self.num[-1], self.den[-1])
        return None

    def __repr__(self) -> str:
        def poly(cs: Sequence[int]) -> str:
            if not cs:
                return "0"
            terms = []
            for k in range(len(cs) - 1, -1, -1):
                c = cs[k]
                if c == 0:
                    continue
                if k == 0:
                    terms.append(str(c))
                elif k == 1:
                    terms.append("q" if c == 1 else f"{c}*q")
                else:
                    terms.append(f"q^{k}" if c == 1 else f"{c}*q^{k}")
            return " + ".join(terms)

        return f"({poly(self.num)})/({poly(self.den)})"


def character_sum(terms: Iterable[CharacterFunction]) -> CharacterFunction:
    acc = CharacterFunction.zero()
    for f in terms:
        acc = acc + f
    return acc


def character_is_constant(f: CharacterFunction) -> Optional[Fraction]:
    return f.is_constant()


def character_limit_at_infinity(f: CharacterFunction) -> Optional[Fraction]:
    return f.limit_at_infinity()
