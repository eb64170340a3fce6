"""Independent brute-force oracle for characteristic numbers.

Deliberately shares no code with the package under test: series are plain
lists of Fractions, products are naive double-loop convolutions, inverses are
computed by long division, and the hyperbolic factor expansions come straight
from factorial formulas.  Used to freeze expected values and to cross-check
the library in the acceptance suite.
"""

from fractions import Fraction
from math import factorial


def conv(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        for j in range(order + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def series_inv(a, order):
    assert a[0] != 0
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1) / a[0]
    for k in range(1, order + 1):
        s = Fraction(0)
        for j in range(1, k + 1):
            s += a[j] * out[k - j]
        out[k] = -s / a[0]
    return out


def series_pow(a, e, order):
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for _ in range(e):
        out = conv(out, a, order)
    return out


def pad(a, order):
    return [Fraction(c) for c in a] + [Fraction(0)] * (order + 1 - len(a))


def l_factor(d, order):
    """d*x/tanh(d*x) = cosh(d*x) / (sinh(d*x)/(d*x)), term by term."""
    cosh = [Fraction(0)] * (order + 1)
    sinh_over = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        cosh[2 * k] = Fraction(d ** (2 * k), factorial(2 * k))
        sinh_over[2 * k] = Fraction(d ** (2 * k), factorial(2 * k + 1))
    return conv(cosh, series_inv(sinh_over, order), order)


def ahat_factor(d, order):
    """(d*x/2)/sinh(d*x/2)."""
    sinh_over = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        sinh_over[2 * k] = Fraction(d ** (2 * k), 4**k * factorial(2 * k + 1))
    return series_inv(sinh_over, order)


def _genus_number(n, degrees, factor):
    order = n
    total = series_pow(factor(1, order), n + len(degrees) + 1, order)
    for d in degrees:
        total = conv(total, series_inv(factor(d, order), order), order)
    t = 1
    for d in degrees:
        t *= d
    return t * total[n]


def euler_ci(n, degrees):
    order = n
    chern = pad([1, 1], order)
    total = series_pow(chern, n + len(degrees) + 1, order)
    for d in degrees:
        total = conv(total, series_inv(pad([1, d], order), order), order)
    t = 1
    for d in degrees:
        t *= d
    value = t * total[n]
    assert value.denominator == 1
    return int(value)


def signature_ci(n, degrees):
    assert n % 2 == 0
    value = _genus_number(n, degrees, l_factor)
    assert value.denominator == 1
    return int(value)


def a_hat_ci(n, degrees):
    assert n % 2 == 0
    return _genus_number(n, degrees, ahat_factor)
