"""Local fundamental matrix frames with explicit branch control.

Gauss frames at 0, 1, infinity; their Kummer-relation rewrites on the hatted
domains; the Kummer frame at 0; the truncated formal frame at the irregular
point; and the three coefficient families that drive the confluence limits.

The coefficient family attached to the frame at 1 is implemented from the
solution of its defining recursion; the recursion itself is kept in the test
suite as an independent oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .branching import BranchedComplex, arg_in_window, principal_arg
from .domains import DomainKind, DomainSpec
from .errors import DegenerateParameterError, DomainError
from .params import Params
from .series import DEFAULT_TOL, SeriesValue, f11, f20_asymptotic, f21
from .systems import EquationFamily, SingularityLabel, residue_frame
from .gammafn import pochhammer

PI = math.pi


@dataclass(frozen=True)
class FrameValue:
    matrix: np.ndarray
    err_estimate: float
    domain: DomainSpec


def _assemble(R: np.ndarray, G: np.ndarray, errG: np.ndarray,
              mon: np.ndarray, domain: DomainSpec) -> FrameValue:
    mat = R @ G @ np.diag(mon)
    scaled = errG * np.abs(mon)[None, :]
    err = float(np.max(np.abs(R) @ scaled))
    return FrameValue(mat, err, domain)


def _entry(sv: SeriesValue, pref: complex) -> tuple[complex, float]:
    return pref * sv.value, abs(pref) * sv.err_estimate


def gauss_frame(label: SingularityLabel, x: BranchedComplex, params: Params,
                tol: float = DEFAULT_TOL) -> FrameValue:
    """Canonical Gauss frame at the given singularity.

    The branch datum of the input is the argument of x itself; the local
    coordinates 1-x and -x inherit it (principal half-open window for 1-x,
    a half-turn shift for -x).
    """
    a, b, g = params.alpha, params.beta, params.gamma_
    xv = x.value

    if label is SingularityLabel.ZERO:
        if abs(xv) >= 1.0:
            raise DomainError(f"|x| = {abs(xv)} outside the unit disk at 0")
        if not arg_in_window(x.arg, -PI, PI):
            raise DomainError(f"arg x = {x.arg} outside [-pi, pi)")
        R, Th = residue_frame(label, params)
        e11, r11 = _entry(f21(a + 1 - g, b - g, 1 - g, xv, tol), 1.0)
        e12, r12 = _entry(f21(a + 1, b, g + 1, xv, tol), xv * a * (g - b) / (g * (g - 1)))
        e21, r21 = _entry(f21(a + 2 - g, b + 1 - g, 3 - g, xv, tol),
                          xv * (a + 1 - g) * (1 - b) / ((1 - g) * (2 - g)))
        e22, r22 = _entry(f21(a, b - 1, g - 1, xv, tol), 1.0)
        mon = np.array([x.power(1 - g), 1.0], dtype=complex)
        dom = DomainSpec(DomainKind.OMEGA_0)

    elif label is SingularityLabel.ONE:
        w = BranchedComplex.principal(1.0 - xv)
        if w.modulus >= 1.0:
            raise DomainError(f"|1-x| = {w.modulus} outside the unit disk at 1")
        R, Th = residue_frame(label, params)
        u = w.value
        e11, r11 = _entry(f21(g - a - 1, g - b, g - a - b, u, tol), 1.0)
        e12, r12 = _entry(f21(a + 1, b, a + b + 2 - g, u, tol),
                          u * a * (a + 1 - g) / ((a + b - g) * (a + b + 1 - g)))
        e21, r21 = _entry(f21(g - a, g + 1 - b, g + 2 - a - b, u, tol),
                          u * (b - 1) * (b - g) / ((a + b - g - 1) * (a + b - g)))
        e22, r22 = _entry(f21(a, b - 1, a + b - g, u, tol), 1.0)
        mon = np.array([w.power(g - a - b), 1.0], dtype=complex)
        dom = DomainSpec(DomainKind.OMEGA_1)

    elif label is SingularityLabel.INFINITY:
        if abs(xv) <= 1.0:
            raise DomainError(f"|x| = {abs(xv)} inside the unit disk at infinity")
        mx = x.negated()
        if not arg_in_window(mx.arg, -PI, PI):
            raise DomainError(f"arg(-x) = {mx.arg} outside [-pi, pi)")
        R, Th = residue_frame(label, params)
        u = 1.0 / xv
        pref21 = (u * a * (b - 1) * (b - g) * (g - a - 1)
                  / ((a - b) * (a + 1 - b) ** 2 * (a + 2 - b)))
        e11, r11 = _entry(f21(a, a + 1 - g, a + 1 - b, u, tol), 1.0)
        e12, r12 = _entry(f21(b, b + 1 - g, b + 1 - a, u, tol), -u)
        e21, r21 = _entry(f21(a + 1, a + 2 - g, a + 3 - b, u, tol), pref21)
        e22, r22 = _entry(f21(b - 1, b - g, b - a - 1, u, tol), 1.0)
        mon = np.array([mx.power(-a), mx.power(-(b - 1))], dtype=complex)
        dom = DomainSpec(DomainKind.OMEGA_INF)

    else:
        raise DomainError(f"unknown singularity label {label}")

    G = np.array([[e11, e12], [e21, e22]], dtype=complex)
    errG = np.array([[r11, r12], [r21, r22]])
    return _assemble(R, G, errG, mon, dom)


def gauss_frame_rewritten(label: SingularityLabel, x: BranchedComplex,
                          params: Params, tol: float = DEFAULT_TOL) -> FrameValue:
    """Kummer-relation rewrite of the frame at 1 or infinity.

    Equal to the canonical frame on the overlap of the domains; the series
    variable is 1/x (infinity) or 1 - 1/x (at 1), which stays meaningful
    after the confluence substitution.  Each entry series is itself a Gauss
    series, so the f21 engine provides the tail certificates.
    """
    a, b, g = params.alpha, params.beta, params.gamma_
    xv = x.value
    one_minus_x = BranchedComplex.principal(1.0 - xv)

    if label is SingularityLabel.INFINITY:
        if abs(xv) <= 1.0:
            raise DomainError("rewritten infinity frame needs |x| > 1")
        mx = x.negated()
        R, _ = residue_frame(SingularityLabel.INFINITY, params)
        u = 1.0 / xv
        pref21 = (u * a * (1 - b) * (b - g) * (a + 1 - g)
                  / ((a - b) * (a + 1 - b) ** 2 * (a + 2 - b)))
        e11, r11 = _entry(f21(1 - b, g - b, a + 1 - b, u, tol), 1.0)
        e12, r12 = _entry(f21(b, b + 1 - g, b + 1 - a, u, tol), -u)
        e21, r21 = _entry(f21(2 - b, g + 1 - b, a + 3 - b, u, tol), pref21)
        e22, r22 = _entry(f21(b - 1, b - g, b - a - 1, u, tol), 1.0)
        # diag((-x)^{beta-gamma} (1-x)^{gamma-alpha-beta}, (-x)^{1-beta})
        mon = np.array(
            [mx.power(b - g) * one_minus_x.power(g - a - b), mx.power(1 - b)],
            dtype=complex,
        )
        dom = DomainSpec(DomainKind.OMEGA_HAT_INF)

    elif label is SingularityLabel.ONE:
        if abs(1.0 - 1.0 / xv) >= 1.0:
            raise DomainError("rewritten frame at 1 needs |1 - 1/x| < 1")
        if not arg_in_window(x.arg, -PI, PI):
            raise DomainError(f"arg x = {x.arg} outside [-pi, pi)")
        R, _ = residue_frame(SingularityLabel.ONE, params)
        u = 1.0 - 1.0 / xv
        e11, r11 = _entry(f21(1 - b, g - b, g - a - b, u, tol), 1.0)
        e12, r12 = _entry(f21(b, b + 1 - g, a + b + 2 - g, u, tol),
                          -u * a * (a + 1 - g) / ((a + b - g) * (a + b + 1 - g)))
        e21, r21 = _entry(f21(2 - b, g + 1 - b, g + 2 - a - b, u, tol),
                          u * (1 - b) * (b - g) / ((g - a - b) * (g + 1 - a - b)))
        e22, r22 = _entry(f21(b - 1, b - g, a + b - g, u, tol), 1.0)
        # diag(x^{beta-gamma} (1-x)^{gamma-alpha-beta}, x^{1-beta})
        mon = np.array(
            [x.power(b - g) * one_minus_x.power(g - a - b), x.power(1 - b)],
            dtype=complex,
        )
        dom = DomainSpec(DomainKind.OMEGA_HAT_1)

    else:
        raise DomainError("rewritten frames exist at the labels ONE and INFINITY")

    G = np.array([[e11, e12], [e21, e22]], dtype=complex)
    errG = np.array([[r11, r12], [r21, r22]])
    return _assemble(R, G, errG, mon, dom)


def kummer_frame_zero(z: BranchedComplex, params: Params,
                      tol: float = DEFAULT_TOL) -> FrameValue:
    """Kummer frame at z = 0 on the branch window [-3pi/2, pi/2)."""
    b, g = params.beta, params.gamma_
    if not arg_in_window(z.arg, -1.5 * PI, 0.5 * PI):
        raise DomainError(f"arg z = {z.arg} outside [-3pi/2, pi/2)")
    R, _ = residue_frame(SingularityLabel.ZERO, params, EquationFamily.KUMMER)
    zv = z.value
    e11, r11 = _entry(f11(b - g, 1 - g, zv, tol), 1.0)
    e12, r12 = _entry(f11(b, g + 1, zv, tol), zv * (g - b) / (g * (g - 1)))
    e21, r21 = _entry(f11(b + 1 - g, 3 - g, zv, tol),
                      zv * (1 - b) / ((1 - g) * (2 - g)))
    e22, r22 = _entry(f11(b - 1, g - 1, zv, tol), 1.0)
    H = np.array([[e11, e12], [e21, e22]], dtype=complex)
    errH = np.array([[r11, r12], [r21, r22]])
    mon = np.array([z.power(1 - g), 1.0], dtype=complex)
    return _assemble(R, H, errH, mon, DomainSpec(DomainKind.OMEGA_TILDE_0))


def sector_index(arg: float) -> int:
    """The largest k with arg inside the maximal sector of index k."""
    return math.floor((arg + 0.5 * PI) / PI)


def kummer_formal_frame(z: BranchedComplex, params: Params,
                        N: int | None = None) -> FrameValue:
    """Optimally truncated formal frame at the irregular point.

    With N=None each entry of the divergent series is summed to its smallest
    term; a fixed N truncates every entry after n = N.  err_estimate is the
    magnitude of the first omitted entrywise term times the corresponding
    exponential-monomial column scale.
    """
    b, g = params.beta, params.gamma_
    R, _ = residue_frame(SingularityLabel.INFINITY, params, EquationFamily.KUMMER)
    lz = z.log
    zv = z.value
    w = 1.0 / zv

    if N is None:
        s11 = f20_asymptotic(1 - b, g - b, w)
        s12 = f20_asymptotic(b, b + 1 - g, -w)
        s21 = f20_asymptotic(2 - b, g + 1 - b, w)
        s22 = f20_asymptotic(b - 1, b - g, -w)
        e11, r11 = s11.value, s11.err_estimate
        e12, r12 = _entry(s12, -w)
        e21, r21 = _entry(s21, (1 - b) * (b - g) * w)
        e22, r22 = s22.value, s22.err_estimate
        H = np.array([[e11, e12], [e21, e22]], dtype=complex)
        errH = np.array([[r11, r12], [r21, r22]])
    else:
        H = np.zeros((2, 2), dtype=complex)
        for n in range(N + 1):
            H += coeff_h_inf(n, params) * w ** n
        errH = np.abs(coeff_h_inf(N + 1, params)) * abs(w) ** (N + 1)

    mon = np.array([cmath.exp(zv + (b - g) * lz), cmath.exp((1 - b) * lz)],
                   dtype=complex)
    dom = DomainSpec(DomainKind.SIGMA_TILDE, k=sector_index(z.arg))
    return _assemble(R, H, errH, mon, dom)


# ---------------------------------------------------------------------------
# coefficient families
# ---------------------------------------------------------------------------

def coeff_h_inf(n: int, params: Params) -> np.ndarray:
    """n-th coefficient of the formal series at the Kummer irregular point."""
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    if n == 0:
        return np.eye(2, dtype=complex)
    b, g = params.beta, params.gamma_
    fn = math.factorial(n)
    fn1 = math.factorial(n - 1)
    sgn = (-1.0) ** n
    return np.array(
        [
            [pochhammer(1 - b, n) * pochhammer(g - b, n) / fn,
             pochhammer(b, n - 1) * pochhammer(b + 1 - g, n - 1) / (sgn * fn1)],
            [(1 - b) * (b - g) * pochhammer(2 - b, n - 1) * pochhammer(g + 1 - b, n - 1) / fn1,
             pochhammer(b - 1, n) * pochhammer(b - g, n) / (sgn * fn)],
        ],
        dtype=complex,
    )


def coeff_ghat_inf(n: int, params: Params) -> np.ndarray:
    """n-th coefficient of the rewritten series at infinity (variable 1/x)."""
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    if n == 0:
        return np.eye(2, dtype=complex)
    a, b, g = params.alpha, params.beta, params.gamma_
    den = (a - b) * (a + 1 - b) ** 2 * (a + 2 - b)
    if abs(den) == 0.0:
        raise DegenerateParameterError("coefficient denominator vanishes")
    fn = math.factorial(n)
    fn1 = math.factorial(n - 1)
    pref = a * (1 - b) * (b - g) * (a + 1 - g) / den
    return np.array(
        [
            [pochhammer(1 - b, n) * pochhammer(g - b, n)
             / (pochhammer(a + 1 - b, n) * fn),
             -pochhammer(b, n - 1) * pochhammer(b + 1 - g, n - 1)
             / (pochhammer(b + 1 - a, n - 1) * fn1)],
            [pref * pochhammer(2 - b, n - 1) * pochhammer(g + 1 - b, n - 1)
             / (pochhammer(a + 3 - b, n - 1) * fn1),
             pochhammer(b - 1, n) * pochhammer(b - g, n)
             / (pochhammer(b - a - 1, n) * fn)],
        ],
        dtype=complex,
    )


def coeff_ghat_one(n: int, params: Params) -> np.ndarray:
    """n-th coefficient of the rewritten series at 1 (variable 1 - 1/x).

    Closed form obtained by solving the defining recursion; stable at any
    |alpha| because every factor is a plain product ratio.
    """
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    if n == 0:
        return np.eye(2, dtype=complex)
    a, b, g = params.alpha, params.beta, params.gamma_
    fn = math.factorial(n)
    fn1 = math.factorial(n - 1)
    q = a + b - g   # poles of the lower Pochhammers are excluded by non-resonance
    if abs(q) == 0.0:
        raise DegenerateParameterError("coefficient denominator vanishes")
    return np.array(
        [
            [pochhammer(1 - b, n) * pochhammer(g - b, n)
             / (pochhammer(-q, n) * fn),
             -a * (a + 1 - g) * pochhammer(b, n - 1) * pochhammer(b + 1 - g, n - 1)
             / (pochhammer(q, n + 1) * fn1)],
            [(1 - b) * (b - g) * pochhammer(2 - b, n - 1) * pochhammer(g + 1 - b, n - 1)
             / (pochhammer(-q, n + 1) * fn1),
             pochhammer(b - 1, n) * pochhammer(b - g, n)
             / (pochhammer(q, n) * fn)],
        ],
        dtype=complex,
    )
