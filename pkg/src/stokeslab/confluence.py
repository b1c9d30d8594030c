"""Confluence experiments: rescaled connection/monodromy products, their
limits toward the Kummer Stokes/connection/monodromy matrices, convergence
rate measurement along the two imaginary rays, and the Fuchsian-point limit.

Branch convention throughout: arg(-alpha) = arg(alpha) + pi, so with
arg(alpha) = +-pi/2 the negated parameter sits at 3pi/2 or pi/2.  All
rescaled products are assembled in log space: the suppressed entries decay
like exp(-pi|alpha|) or faster and would otherwise turn into inf * 0.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .branching import BranchedComplex, principal_arg
from .domains import DomainKind, DomainSpec, sector_membership
from .errors import DomainError, FitError
from .frames import coeff_h_inf, gauss_frame, kummer_frame_zero
from .gammafn import pochhammer
from .monodromy import (ConnectionKind, kummer_connection, kummer_monodromy,
                        kummer_monodromy_infinity, kummer_stokes,
                        log_gauss_connection)
from .params import Params
from .systems import EquationFamily, SingularityLabel, residue_frame

PI = math.pi
RAY_TOL = 1e-9


class ScalingKind(enum.Enum):
    D_INF_MINUS = "dinfminus"  # diag((-a)^{beta-gamma}, -(-a)^{-beta}), right factor
    D_ONE = "done"             # diag(a^{gamma-beta}, -a^{beta}), left factor
    D_ZERO = "dzero"           # diag(a^{gamma-1}, 1), left factor
    D_INF_LEFT = "dinfleft"    # diag((-a)^{gamma-beta}, -(-a)^{beta}), left factor


class LimitTarget(enum.Enum):
    S0 = "S0"
    SM1 = "Sm1"
    C0INF = "C0Inf"
    M0 = "M0"
    MINF = "MInf"


def _ray_arg(alpha: complex) -> float:
    arg = principal_arg(complex(alpha))
    if abs(arg - PI / 2) > RAY_TOL and abs(arg + PI / 2) > RAY_TOL:
        raise DomainError(
            f"confluence parameter must sit on arg = +-pi/2, got arg = {arg}"
        )
    return PI / 2 if arg > 0 else -PI / 2


def _branched_alpha(alpha: complex) -> tuple[BranchedComplex, BranchedComplex]:
    """(alpha, -alpha) with arg(-alpha) = arg(alpha) + pi."""
    arg = _ray_arg(alpha)
    a = BranchedComplex.from_polar(abs(alpha), arg)
    return a, BranchedComplex.from_polar(abs(alpha), arg + PI)


def scaling_log_diag(kind: ScalingKind, alpha: complex, params: Params) -> np.ndarray:
    """Complex logs of the two diagonal entries of the scaling matrix."""
    b, g = params.beta, params.gamma_
    a, ma = _branched_alpha(alpha)
    ipi = 1j * PI  # log(-1) for the explicit minus signs
    if kind is ScalingKind.D_INF_MINUS:
        return np.array([(b - g) * ma.log, ipi + (-b) * ma.log])
    if kind is ScalingKind.D_ONE:
        return np.array([(g - b) * a.log, ipi + b * a.log])
    if kind is ScalingKind.D_ZERO:
        return np.array([(g - 1) * a.log, 0.0 + 0.0j])
    return np.array([(g - b) * ma.log, ipi + b * ma.log])


def scaling_matrix(kind: ScalingKind, alpha: complex, params: Params) -> np.ndarray:
    return np.diag(np.exp(scaling_log_diag(kind, alpha, params)))


def _scaled_connection_logs(which: ConnectionKind, left: ScalingKind,
                            alpha: complex, params: Params) -> np.ndarray:
    logs = log_gauss_connection(which, params)
    dl = scaling_log_diag(left, alpha, params)
    dr = scaling_log_diag(ScalingKind.D_INF_MINUS, alpha, params)
    return logs + dl[:, None] + dr[None, :]


def scaled_connection(which: LimitTarget, alpha: complex, params: Params) -> np.ndarray:
    """The finite-alpha rescaled connection product for the requested limit."""
    p = params_with_alpha(params, alpha)
    if which in (LimitTarget.S0, LimitTarget.SM1):
        logs = _scaled_connection_logs(ConnectionKind.C1INF, ScalingKind.D_ONE,
                                       alpha, p)
    elif which is LimitTarget.C0INF:
        logs = _scaled_connection_logs(ConnectionKind.C0INF, ScalingKind.D_ZERO,
                                       alpha, p)
    else:
        raise ValueError(f"{which} is a monodromy limit; use scaled_monodromy")
    return np.exp(logs)


def scaled_monodromy(which: LimitTarget, alpha: complex, params: Params) -> np.ndarray:
    """The finite-alpha rescaled monodromy product.

    Both products are conjugations by the same diagonal pair, so they are
    assembled from the rescaled connection matrices; the factor e^{2 pi i
    alpha} of the local exponent at infinity is folded into the logs before
    exponentiation, which keeps every entry finite on the sweep range.
    """
    p = params_with_alpha(params, alpha)
    a, b, g = p.alpha, p.beta, p.gamma_
    if which is LimitTarget.M0:
        B = np.exp(_scaled_connection_logs(ConnectionKind.C0INF,
                                           ScalingKind.D_ZERO, alpha, p))
        e0 = np.diag(np.exp(2j * PI * np.array([1 - g, 0.0])))
        return np.linalg.solve(B, e0 @ B)
    if which is not LimitTarget.MINF:
        raise ValueError(f"{which} is a connection limit; use scaled_connection")

    LA = _scaled_connection_logs(ConnectionKind.C1INF, ScalingKind.D_ONE, alpha, p)
    A = np.exp(LA)
    det = np.exp(LA[0, 0] + LA[1, 1]) - np.exp(LA[0, 1] + LA[1, 0])
    log_u = 2j * PI * a               # local exponent factor at infinity
    w = cmath.exp(2j * PI * (g - a - b))
    uw = cmath.exp(2j * PI * (g - b))
    v = cmath.exp(2j * PI * (b - 1))
    u_a12 = cmath.exp(log_u + LA[0, 1])
    m11 = (uw * A[0, 0] * A[1, 1] - u_a12 * A[1, 0]) / det
    m12 = u_a12 * A[1, 1] * (w - 1.0) / det
    m21 = v * A[0, 0] * A[1, 0] * (1.0 - w) / det
    m22 = v * (A[0, 0] * A[1, 1] - w * A[0, 1] * A[1, 0]) / det
    return np.array([[m11, m12], [m21, m22]], dtype=complex)


def params_with_alpha(params: Params, alpha: complex) -> Params:
    return Params(complex(alpha), params.beta, params.gamma_)


def limit_target_matrix(which: LimitTarget, params: Params) -> np.ndarray:
    """The closed-form Kummer-side matrix each rescaled product converges to."""
    if which is LimitTarget.S0:
        return kummer_stokes(params)[0]
    if which is LimitTarget.SM1:
        return kummer_stokes(params)[1]
    if which is LimitTarget.C0INF:
        return kummer_connection(params)
    if which is LimitTarget.M0:
        return kummer_monodromy(params).M0
    return kummer_monodromy_infinity(params)


DEFAULT_RAY = {
    LimitTarget.S0: PI / 2,
    LimitTarget.SM1: -PI / 2,
    LimitTarget.C0INF: -PI / 2,
    LimitTarget.M0: -PI / 2,
    LimitTarget.MINF: -PI / 2,
}

DEFAULT_MAGNITUDES = (1e2, 10 ** 2.5, 1e3, 10 ** 3.5, 1e4, 1e5)


@dataclass(frozen=True)
class RaySweep:
    arg_alpha: float
    magnitudes: tuple
    params_base: Params

    def __post_init__(self):
        mags = tuple(self.magnitudes)
        if any(m2 <= m1 for m1, m2 in zip(mags[:-1], mags[1:])):
            raise ValueError("sweep magnitudes must be strictly increasing")


@dataclass(frozen=True)
class LimitReport:
    target: np.ndarray
    per_magnitude_errors: tuple
    fitted_rate: float
    fit_residual: float


def default_sweep(which: LimitTarget, params: Params,
                  magnitudes=DEFAULT_MAGNITUDES) -> RaySweep:
    return RaySweep(DEFAULT_RAY[which], tuple(magnitudes), params)


def evaluate_limit_product(which: LimitTarget, alpha: complex,
                           params: Params) -> np.ndarray:
    if which in (LimitTarget.M0, LimitTarget.MINF):
        return scaled_monodromy(which, alpha, params)
    return scaled_connection(which, alpha, params)


def limit_sweep(which: LimitTarget, sweep: RaySweep,
                target: np.ndarray | None = None) -> LimitReport:
    """Errors of the rescaled product against its limit over the sweep, with
    the fitted log-log decay rate (the underlying mechanisms are all O(1/|alpha|),
    so the slope should sit near -1)."""
    if len(sweep.magnitudes) < 4:
        raise FitError("need at least 4 magnitudes for a stable rate fit")
    if math.log10(sweep.magnitudes[-1] / sweep.magnitudes[0]) < 3 - 1e-9:
        raise FitError("sweep must span at least three decades")
    if target is None:
        target = limit_target_matrix(which, sweep.params_base)

    errors = []
    for mag in sweep.magnitudes:
        alpha = mag * cmath.exp(1j * sweep.arg_alpha)
        prod = evaluate_limit_product(which, alpha, sweep.params_base)
        errors.append((mag, float(np.linalg.norm(prod - target))))

    if any(e == 0.0 for _, e in errors):
        raise FitError("sweep errors underflow; rate fit degenerate")
    lx = np.log10([m for m, _ in errors])
    ly = np.log10([e for _, e in errors])
    coeffs, res = np.polyfit(lx, ly, 1, full=True)[:2]
    residual = float(res[0]) if len(res) else 0.0
    return LimitReport(target, tuple(errors), float(coeffs[0]), residual)


# ---------------------------------------------------------------------------
# scalar normalizations and term-ratio limits
# ---------------------------------------------------------------------------

def canonical_normalizer(j: int, at: SingularityLabel, alpha: complex,
                         params: Params) -> complex:
    """The canonical scalar normalizers read off the scaling matrices."""
    b, g = params.beta, params.gamma_
    a, ma = _branched_alpha(alpha)
    if at is SingularityLabel.INFINITY:
        return ma.power(b - g) if j == 1 else -ma.power(-b)
    if at is SingularityLabel.ONE:
        return a.power(b - g) if j == 1 else -a.power(-b)
    raise ValueError("normalizers exist for the labels ONE and INFINITY")


def scalar_normalization_residual(j: int, at: SingularityLabel, alpha: complex,
                                  params: Params) -> complex:
    """product - 1 for the normalization limits; identically 0 for the
    canonical choices, kept as an executable statement of the limit."""
    b, g = params.beta, params.gamma_
    a, ma = _branched_alpha(alpha)
    k = canonical_normalizer(j, at, alpha, params)
    if at is SingularityLabel.INFINITY:
        prod = k * ma.power(g - b) if j == 1 else -k * ma.power(b)
    else:
        prod = k * a.power(g - b) if j == 1 else -k * a.power(b)
    return prod - 1.0


def term_ratio_residual_infinity(n: int, alpha: complex, params: Params,
                                 alt: bool = False) -> complex:
    """alpha^n / (alpha+1-beta)_n - 1, or with alt the companion
    alpha^n / (beta+1-alpha)_n - (-1)^n; both are O(1/alpha)."""
    a, b = complex(alpha), params.beta
    if alt:
        return a ** n / pochhammer(b + 1 - a, n) - (-1.0) ** n
    return a ** n / pochhammer(a + 1 - b, n) - 1.0


def term_ratio_residual_one(n: int, z: complex, alpha: complex, params: Params,
                            alt: bool = False) -> complex:
    """(z-alpha)^n / (gamma+1-alpha-beta)_n - 1, or with alt
    (z-alpha)^n / (alpha+beta+1-gamma)_n - (-1)^n."""
    a, b, g = complex(alpha), params.beta, params.gamma_
    if alt:
        return (z - a) ** n / pochhammer(a + b + 1 - g, n) - (-1.0) ** n
    return (z - a) ** n / pochhammer(g + 1 - a - b, n) - 1.0


def scaled_coeff_inf(n: int, alpha: complex, params: Params) -> np.ndarray:
    """diag(1, alpha) alpha^n ghat_{n,inf} diag(1, 1/alpha), which converges
    entrywise to the formal coefficient h_{n,inf}."""
    from .frames import coeff_ghat_inf
    a = complex(alpha)
    g = coeff_ghat_inf(n, params_with_alpha(params, a))
    return np.diag([1.0, a]) @ (a ** n * g) @ np.diag([1.0, 1.0 / a])


def scaled_coeff_one(n: int, alpha: complex, params: Params) -> np.ndarray:
    """diag(1, -alpha) (-alpha)^n ghat_{n,1} diag(1, -1/alpha) -> h_{n,inf}."""
    from .frames import coeff_ghat_one
    a = complex(alpha)
    g = coeff_ghat_one(n, params_with_alpha(params, a))
    return np.diag([1.0, -a]) @ ((-a) ** n * g) @ np.diag([1.0, -1.0 / a])


# ---------------------------------------------------------------------------
# the Fuchsian-point limit
# ---------------------------------------------------------------------------

def omega0_moving(alpha: complex) -> DomainSpec:
    """The shrinking-coordinate image |z| < |alpha| of the disk at 0; the
    branch window is that of the limit domain."""
    return DomainSpec(DomainKind.OMEGA_TILDE_0, alpha=alpha)


def fuchsian_limit_check(z: BranchedComplex, alpha: complex,
                         params: Params) -> float:
    """|| Y^{(0)}(z/alpha) alpha^{Theta_0} - Y~^{(0)}(z) ||, which tends to 0
    along arg(alpha) = -pi/2.

    The substituted point x = z/alpha carries arg x = arg z - arg alpha, so
    the disk window at 0 maps exactly onto the window of the limit frame.
    """
    a_br, _ = _branched_alpha(alpha)
    if z.modulus >= abs(alpha):
        raise DomainError("fuchsian limit needs |z| < |alpha|")
    if not (-1.5 * PI - 1e-12 <= z.arg < 0.5 * PI):
        raise DomainError("z outside the branch window of the frame at 0")
    p = params_with_alpha(params, complex(alpha))
    x = BranchedComplex(z.value / a_br.value, z.arg - a_br.arg)
    Y0 = gauss_frame(SingularityLabel.ZERO, x, p).matrix
    g = p.gamma_
    scale = np.diag([a_br.power(1 - g), 1.0])
    Yt = kummer_frame_zero(z, p).matrix
    return float(np.linalg.norm(Y0 @ scale - Yt))
