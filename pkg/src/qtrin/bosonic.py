"""Bosonic sides: alternating theta sums over refined trinomials, Virasoro
characters, string functions and branching functions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .qcomb import qbinomial, qtrinomial2, qtrinomial_T, refined_T
from .qpoly import (
    QPoly,
    QSeries,
    euler_inverse,
    pochhammer,
    pochhammer_multi,
)

_HALF = Fraction(1, 2)


class PreconditionViolation(Exception):
    pass


class InvalidCharLabel(Exception):
    pass


class InvalidBranchLabel(Exception):
    pass


class RepresentationMismatch(Exception):
    """The three string-function representations disagree: implementation bug."""


def _jrange(L: int, M: int, widen: int = 0) -> range:
    # Every theta sum below hits refined_T arguments growing linearly in j;
    # |a| > L kills the term, so a small window suffices.
    j = max(L, M) + 2 + widen
    return range(-j, j + 1)


def conj_lhs(which: int, L: int, M: int, widen: int = 0) -> QPoly:
    """Alternating theta sum over refined trinomials for conjecture 1, 2 or 3."""
    if L < 0 or M < 0:
        raise ValueError("L and M must be nonnegative")
    out = QPoly.zero()
    if which == 1:
        for j in _jrange(L, M, widen):
            out = out + refined_T(L, M, 3 * j, 5 * j).shift(
                Fraction(j * (15 * j + 2), 2))
            out = out - refined_T(L, M, 3 * j + 1, 5 * j + 1).shift(
                Fraction((3 * j + 1) * (5 * j + 1), 2))
        return out
    if which == 2:
        for j in _jrange(L, M, widen):
            out = out + refined_T(L, M, 4 * j, 6 * j).shift(
                Fraction(j * (24 * j + 2), 2))
            out = out - refined_T(L, M, 4 * j + 1, 6 * j + 1).shift(
                Fraction((4 * j + 1) * (6 * j + 1), 2))
        return out
    if which == 3:
        for j in _jrange(L, M, widen):
            out = out + refined_T(L, M, 6 * j, 8 * j).shift(
                Fraction(j * (48 * j + 2), 2))
            out = out - refined_T(L, M, 6 * j + 1, 8 * j + 1).shift(
                Fraction((6 * j + 1) * (8 * j + 1), 2))
            out = out + refined_T(L, M, 6 * j + 2, 8 * j + 3).shift(
                Fraction(j * (48 * j + 34), 2) + 3)
            out = out - refined_T(L, M, 6 * j + 3, 8 * j + 4).shift(
                Fraction((6 * j + 1) * (8 * j + 7), 2) + 3)
        return out
    raise ValueError("conjecture index must be 1, 2 or 3")


def kseries_lhs(family: str, k: int, L: int, M: int, widen: int = 0) -> QPoly:
    """Theta-sum side of the three iterated families at depth k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if L < 0 or M < 0:
        raise ValueError("L and M must be nonnegative")
    out = QPoly.zero()
    if family == "E8-flower":
        A = 5 * k + 3
        for j in _jrange(L, M, widen):
            out = out + refined_T(L, M, A * j, 5 * j).shift(
                Fraction(j * (5 * A * j + 2), 2))
            out = out - refined_T(L, M, A * j + k + 1, 5 * j + 1).shift(
                Fraction((5 * j + 1) * (A * j + k + 1), 2))
        return out
    if family == "E7-flower2":
        A = 6 * k + 4
        for j in _jrange(L, M, widen):
            out = out + refined_T(L, M, A * j, 6 * j).shift(
                Fraction(j * (6 * A * j + 2), 2))
            out = out - refined_T(L, M, A * j + k + 1, 6 * j + 1).shift(
                Fraction((6 * j + 1) * (A * j + k + 1), 2))
        return out
    if family == "E6-monster":
        A = 8 * k + 6
        pre = Fraction(3 * (3 * k + 2), 2)
        for j in _jrange(L, M, widen):
            out = out + refined_T(L, M, A * j, 8 * j).shift(
                Fraction(j * (8 * A * j + 2), 2))
            out = out - refined_T(L, M, A * j + k + 1, 8 * j + 1).shift(
                Fraction((8 * j + 1) * (A * j + k + 1), 2))
            out = out + refined_T(L, M, A * j + 3 * k + 2, 8 * j + 3).shift(
                pre + Fraction(j * (8 * A * j + 48 * k + 34), 2))
            out = out - refined_T(L, M, A * j + 4 * k + 3, 8 * j + 4).shift(
                pre + Fraction((8 * j + 7) * (A * j + k + 1), 2))
        return out
    raise ValueError(f"unknown k-series family {family!r}")


def invariance_check(L: int, M: int, a: int, b: int) -> bool:
    """The refined-trinomial invariance: summing q^{i^2/2} [L+M-i choose L]
    times the refinement at (L-i, i, a, b) telescopes to q^{b^2/2} times the
    refinement at (L, M, a+b, b)."""
    if (a > 0 and b < 0) or (a < 0 and b > 0):
        raise PreconditionViolation("a and b must not have strictly opposite signs")
    lhs = QPoly.zero()
    for i in range(abs(b), min(L - abs(a), M) + 1):
        t = refined_T(L - i, i, a, b)
        if not t:
            continue
        lhs = lhs + (qbinomial(L + M - i, L) * t).shift(Fraction(i * i, 2))
    rhs = refined_T(L, M, a + b, b).shift(Fraction(b * b, 2))
    return lhs == rhs


# -- string functions ------------------------------------------------


def _string_nsum(sigma: int, order: Fraction) -> QSeries:
    # sum_{n = sigma mod 2} q^{n^2/2}/(q)_n, divided by (q)_inf: this is the
    # large-L limit of T(L,a) with L+a+sigma even (verified numerically; the
    # bare n-sum does not match the closed-form representations).
    out = QSeries.zero(order)
    n = sigma
    while Fraction(n * n, 2) < order:
        t = QSeries({Fraction(n * n, 2): 1}, order)
        if n:
            t = t * pochhammer(1, 1, 1, n, order).inverse()
        out = out + t
        n += 2
    return out * euler_inverse(order)


def _string_pochhammer(sigma: int, order: Fraction) -> QSeries:
    plus = pochhammer(_HALF, -1, 1, None, order)   # (-q^{1/2}; q)_inf
    minus = pochhammer(_HALF, 1, 1, None, order)   # (q^{1/2}; q)_inf
    num = plus + minus if sigma == 0 else plus - minus
    assert all(c % 2 == 0 for c in num.terms.values())
    half = QSeries({e: c // 2 for e, c in num.terms.items()}, order)
    return half * euler_inverse(order)


def _string_product(sigma: int, order: Fraction) -> QSeries:
    shift = Fraction(sigma, 2)
    inner = order - shift
    den = euler_inverse(inner)
    den = den * pochhammer_multi(
        (3 - 2 * sigma, 4, 5 + 2 * sigma), 8, inner).inverse()
    den = den * pochhammer_multi(
        (2 + 4 * sigma, 14 - 4 * sigma), 16, inner).inverse()
    return den.shift(shift)


@lru_cache(maxsize=None)
def string_function(sigma: int, order: Fraction | int) -> QSeries:
    """Level-1 string function c_sigma, computed via the parity-restricted
    n-sum and cross-checked against the two closed-form representations."""
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    order = Fraction(order)
    a = _string_nsum(sigma, order)
    b = _string_pochhammer(sigma, order)
    c = _string_product(sigma, order)
    if not (a == b == c):
        raise RepresentationMismatch(
            f"string function c_{sigma} representations disagree at order {order}")
    return a


# -- Virasoro characters and branching functions ---------------------


def _char_jrange(quad: int, lin: int, cutoff: Fraction, widen: int = 0) -> range:
    # smallest J with quad*j^2 - lin*|j| >= cutoff for all |j| > J
    c = max(int(cutoff), 0)
    j = 1 + (lin + isqrt(lin * lin + 4 * quad * c) + 2 * quad - 1) // (2 * quad)
    j += widen
    return range(-j, j + 1)


def virasoro_char(
    p: int, pp: int, r: int, s: int, order: Fraction | int, widen: int = 0
) -> QSeries:
    """Minimal-model character chi^{(p,p')}_{r,s} as a truncated series.

    Labels with p > p' are accepted via the symmetry chi^{(p,p')}_{r,s} =
    chi^{(p',p)}_{s,r}.
    """
    if p > pp:
        p, pp, r, s = pp, p, s, r
    if not (2 <= p < pp and gcd(p, pp) == 1):
        raise InvalidCharLabel(f"need coprime 2 <= p < p', got ({p},{pp})")
    if not (1 <= r <= p - 1 and 1 <= s <= pp - 1):
        raise InvalidCharLabel(f"labels (r,s)=({r},{s}) out of range for ({p},{pp})")
    order = Fraction(order)
    alpha = Fraction((pp * r - p * s) ** 2 - 1, 4 * p * pp)
    inner = order - alpha
    if inner <= 0:
        return QSeries.zero(order)
    lin = max(abs(pp * r - p * s), p * s + pp * r)
    theta: dict[Fraction, int] = {}
    for j in _char_jrange(p * pp, lin, inner, widen):
        for e, sign in (
            (j * (p * pp * j + pp * r - p * s), 1),
            ((p * j + r) * (pp * j + s), -1),
        ):
            ef = Fraction(e)
            if ef < inner:
                theta[ef] = theta.get(ef, 0) + sign
    series = QSeries(theta, inner) * euler_inverse(inner)
    return series.shift(alpha)


def branching_function(
    p: int, pp: int, r: int, s: int, sigma: int, order: Fraction | int,
    widen: int = 0,
) -> QSeries:
    """Coset branching function B^{(p,p')}_{r,s;sigma} as a truncated series."""
    if not (2 <= p < pp):
        raise InvalidBranchLabel(f"need 2 <= p < p', got ({p},{pp})")
    if not (1 <= r <= p - 1 and 1 <= s <= pp - 1):
        raise InvalidBranchLabel(f"labels (r,s)=({r},{s}) out of range")
    if (pp - p) % 2 or (r - s) % 2:
        raise InvalidBranchLabel("p'-p and r-s must both be even")
    if gcd((pp - p) // 2, pp) != 1:
        raise InvalidBranchLabel("need gcd((p'-p)/2, p') = 1")
    if sigma not in (0, 1):
        raise InvalidBranchLabel("sigma must be 0 or 1")
    order = Fraction(order)
    alpha = Fraction((pp * r - p * s) ** 2 - 4, 8 * p * pp)
    inner = order - alpha
    if inner <= 0:
        return QSeries.zero(order)
    # Theta exponents run at half the Virasoro scale, and the 1/(q)_inf
    # prefactor is already carried inside the normalized string functions;
    # this is the reading under which B^{(3,5)}_{1,1;sigma} equals
    # chi^{(4,5)}_{2 sigma+1,1} exactly (checked coefficientwise).
    c = (string_function(0, inner), string_function(1, inner))
    acc = QSeries.zero(inner)
    lin = max(abs(pp * r - p * s), p * s + pp * r)
    for j in _char_jrange(p * pp, lin, 2 * inner, widen):
        e1 = Fraction(j * (p * pp * j + pp * r - p * s), 2)
        if e1 < inner:
            idx = (p * j + (r - s) // 2 + sigma) % 2
            acc = acc + c[idx].shift(e1).truncate(inner)
        e2 = Fraction((p * j + r) * (pp * j + s), 2)
        if e2 < inner:
            idx = (p * j + (r + s) // 2 + sigma) % 2
            acc = acc - c[idx].shift(e2).truncate(inner)
    return acc.shift(alpha)


# -- single-sum cross-checks -----------------------------------------


def abp_series_check(b: int, order: Fraction | int) -> bool:
    """Truncated check of sum_i q^{i^2/2} T(i,b)/(q)_i = q^{b^2/2}/(q)_inf."""
    order = Fraction(order)
    lhs = QSeries.zero(order)
    i = 0
    while Fraction(i * i, 2) < order:
        t = qtrinomial_T(i, b)
        if t:
            ser = t.to_series(order - Fraction(i * i, 2))
            if i:
                ser = ser * pochhammer(1, 1, 1, i, ser.order).inverse()
            lhs = lhs + QSeries(ser.shift(Fraction(i * i, 2)).terms, order)
        i += 1
    rhs = euler_inverse(order - Fraction(b * b, 2)).shift(Fraction(b * b, 2))
    return lhs == QSeries(rhs.terms, order)


def con_identity_check(L: int, b: int) -> bool:
    """Exact polynomial check of sum_i q^{i^2/2} [L,i] T(i,b)
    = q^{b^2/2} [2L choose L-b]."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    lhs = QPoly.zero()
    for i in range(0, L + 1):
        f = qbinomial(L, i) * qtrinomial_T(i, b)
        if f:
            lhs = lhs + f.shift(Fraction(i * i, 2))
    rhs = qbinomial(2 * L, L - b).shift(Fraction(b * b, 2))
    return lhs == rhs
