"""Series engines: convergent 2F1 and 1F1 summation with certified truncation
bounds, and optimally truncated divergent 2F0 asymptotic summation.

The 2F1/1F1 tail certificates use the monotone majorant

    |term ratio at index m| <= |x| (1+|a|/n)(1+|b|/n) / (1-|c|/n)   for m >= n > |c|,

which is strictly decreasing in n, so once it drops below 1 the tail is
bounded by a geometric series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConvergenceError, DivergenceError, DomainError
from .gammafn import is_nonpositive_integer

DEFAULT_TOL = 1e-12
TERM_CAP = 100_000


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    err_estimate: float
    terms_used: int


def f21(a: complex, b: complex, c: complex, x: complex,
        tol: float = DEFAULT_TOL) -> SeriesValue:
    """Gauss series sum_{n} (a)_n (b)_n / ((c)_n n!) x^n for |x| < 1."""
    a, b, c, x = complex(a), complex(b), complex(c), complex(x)
    if is_nonpositive_integer(c):
        raise DomainError(f"f21 lower parameter c = {c} is a nonpositive integer")
    ax = abs(x)
    if ax >= 1.0:
        raise DomainError(f"f21 series requires |x| < 1, got |x| = {ax}")
    if ax == 0.0:
        return SeriesValue(1.0 + 0.0j, 0.0, 1)

    s = 1.0 + 0.0j
    t = 1.0 + 0.0j
    aa, ab, ac = abs(a), abs(b), abs(c)
    for n in range(1, TERM_CAP):
        t *= (a + n - 1) * (b + n - 1) / ((c + n - 1) * n) * x
        s += t
        if n > ac:
            r = ax * (1 + aa / n) * (1 + ab / n) / (1 - ac / n)
            if r < 1.0:
                tail = abs(t) * r / (1.0 - r)
                if tail <= tol:
                    return SeriesValue(s, tail, n + 1)
    raise ConvergenceError(
        f"f21 could not certify tolerance {tol} within {TERM_CAP} terms"
    )


def f11(a: complex, c: complex, z: complex, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Kummer series sum_{n} (a)_n / ((c)_n n!) z^n (entire in z)."""
    a, c, z = complex(a), complex(c), complex(z)
    if is_nonpositive_integer(c):
        raise DomainError(f"f11 lower parameter c = {c} is a nonpositive integer")
    if z == 0.0:
        return SeriesValue(1.0 + 0.0j, 0.0, 1)

    s = 1.0 + 0.0j
    t = 1.0 + 0.0j
    az, aa, ac = abs(z), abs(a), abs(c)
    for n in range(1, TERM_CAP):
        t *= (a + n - 1) / ((c + n - 1) * n) * z
        s += t
        if n > ac:
            r = az * (1 + aa / n) / ((1 - ac / n) * (n + 1))
            if r < 1.0:
                tail = abs(t) * r / (1.0 - r)
                if tail <= tol:
                    return SeriesValue(s, tail, n + 1)
    raise ConvergenceError(
        f"f11 could not certify tolerance {tol} within {TERM_CAP} terms"
    )


def f20_asymptotic(a: complex, b: complex, w: complex) -> SeriesValue:
    """Divergent series sum_n (a)_n (b)_n / n! w^n summed to its smallest term.

    Terms are accumulated up to, and excluding, the first index at which
    |term| stops decreasing; err_estimate is the magnitude of the first
    omitted term.  Terms that vanish identically (a or b a nonpositive
    integer, or w = 0) terminate the sum exactly.
    """
    a, b, w = complex(a), complex(b), complex(w)
    s = 1.0 + 0.0j
    t = 1.0 + 0.0j
    for n in range(TERM_CAP):
        t_next = t * (a + n) * (b + n) / (n + 1) * w
        if t_next == 0.0:
            return SeriesValue(s, 0.0, n + 1)
        if abs(t_next) >= abs(t):
            if n == 0:
                raise DivergenceError(
                    f"asymptotic series diverges immediately at w = {w}"
                )
            return SeriesValue(s, abs(t_next), n + 1)
        s += t_next
        t = t_next
        if abs(t) <= 1e-18 * abs(s):
            # next term is below roundoff of the sum; report it as omitted
            t_omit = t * (a + n + 1) * (b + n + 1) / (n + 2) * w
            return SeriesValue(s, abs(t_omit), n + 2)
    raise ConvergenceError(
        f"asymptotic series reached the {TERM_CAP}-term cap before its smallest term"
    )
