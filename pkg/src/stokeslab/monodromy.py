"""Closed-form connection, Stokes and monodromy matrices.

Every entry is assembled as exp(sum of log-gammas + phase), so the matrices
stay finite for parameter magnitudes far beyond the overflow range of the
individual gamma factors; this is what the confluence sweeps rely on.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleError
from .gammafn import gamma_quotient, is_nonpositive_integer, log_gamma_quotient, recip_gamma
from .params import Params
from .systems import EquationFamily, SingularityLabel, exp_2pi_i, residue_frame

IPI = 1j * math.pi


class ConnectionKind(enum.Enum):
    C0INF = "0inf"
    C1INF = "1inf"
    C01 = "01"


def _entries_c0inf(p: Params):
    a, b, g = p.alpha, p.beta, p.gamma_
    return (
        ((a + 1 - b, g - 1), (a, g - b), IPI * (g - 1)),
        ((b + 1 - a, g - 1), (b, g - a), IPI * (g - 1)),
        ((a + 1 - b, 1 - g), (1 - b, a + 1 - g), 0.0),
        ((b + 1 - a, 1 - g), (1 - a, b + 1 - g), 0.0),
    )


def _entries_c1inf(p: Params):
    a, b, g = p.alpha, p.beta, p.gamma_
    return (
        ((a + 1 - b, a + b - g), (a, a + 1 - g), IPI * (g - b)),
        ((b + 1 - a, a + b - g), (b, b + 1 - g), IPI * (g - a)),
        ((a + 1 - b, g - a - b), (1 - b, g - b), IPI * a),
        ((b + 1 - a, g - a - b), (1 - a, g - a), IPI * b),
    )


def _entries_c01(p: Params):
    a, b, g = p.alpha, p.beta, p.gamma_
    return (
        ((g + 1 - a - b, g - 1), (g - a, g - b), 0.0),
        ((a + b + 1 - g, g - 1), (a, b), 0.0),
        ((g + 1 - a - b, 1 - g), (1 - a, 1 - b), 0.0),
        ((a + b + 1 - g, 1 - g), (a + 1 - g, b + 1 - g), 0.0),
    )


_GAUSS_ENTRIES = {
    ConnectionKind.C0INF: _entries_c0inf,
    ConnectionKind.C1INF: _entries_c1inf,
    ConnectionKind.C01: _entries_c01,
}


def _build(entries) -> np.ndarray:
    vals = []
    for num, den, extra in entries:
        for z in num + den:
            if is_nonpositive_integer(complex(z)):
                raise PoleError(
                    f"connection entry hits a gamma pole at argument {z}"
                )
        vals.append(gamma_quotient(num, den, extra))
    return np.array(vals, dtype=complex).reshape(2, 2)


def gauss_connection(which: ConnectionKind, params: Params) -> np.ndarray:
    """The printed gamma-product connection matrix of the requested pair."""
    params.require_gauss()
    return _build(_GAUSS_ENTRIES[which](params))


def log_gauss_connection(which: ConnectionKind, params: Params) -> np.ndarray:
    """Entrywise complex logs of the connection matrix (for rescaled products
    at very large parameter magnitudes)."""
    params.require_gauss()
    logs = [log_gamma_quotient(num, den, extra)
            for num, den, extra in _GAUSS_ENTRIES[which](params)]
    return np.array(logs, dtype=complex).reshape(2, 2)


def kummer_connection(params: Params) -> np.ndarray:
    """Connection between the frame at 0 and the sectorial frame of sector 0."""
    params.require_kummer()
    b, g = params.beta, params.gamma_
    entries = (
        ((g - 1,), (g - b,), IPI * (b - 1)),
        ((g - 1,), (b,), IPI),            # -Gamma(g-1)/Gamma(b)
        ((1 - g,), (1 - b,), IPI * (b - g)),
        ((1 - g,), (b + 1 - g,), IPI),    # -Gamma(1-g)/Gamma(b+1-g)
    )
    return _build(entries)


def kummer_stokes(params: Params) -> tuple[np.ndarray, np.ndarray]:
    """The two Stokes matrices of the irregular point.

    Gamma poles in the multipliers are legitimate zeros (the reciprocal gamma
    is entire), so no pole error is raised here.
    """
    params.require_kummer()
    b, g = params.beta, params.gamma_
    s0 = 2j * math.pi * np.exp(IPI * (g - 2 * b)) * recip_gamma(b) * recip_gamma(b + 1 - g)
    sm1 = 2j * math.pi * recip_gamma(1 - b) * recip_gamma(g - b)
    S0 = np.array([[1.0, s0], [0.0, 1.0]], dtype=complex)
    Sm1 = np.array([[1.0, 0.0], [sm1, 1.0]], dtype=complex)
    return S0, Sm1


@dataclass(frozen=True)
class GaussMonodromyData:
    M0: np.ndarray
    M1: np.ndarray
    MInf: np.ndarray


@dataclass(frozen=True)
class KummerMonodromyData:
    M0: np.ndarray
    S0: np.ndarray
    Sm1: np.ndarray


def _theta(label: SingularityLabel, params: Params,
           family: EquationFamily = EquationFamily.GAUSS) -> np.ndarray:
    return residue_frame(label, params, family)[1]


def gauss_monodromy(params: Params) -> GaussMonodromyData:
    """Monodromy normalized in the frame at infinity; counterclockwise loops."""
    c0 = gauss_connection(ConnectionKind.C0INF, params)
    c1 = gauss_connection(ConnectionKind.C1INF, params)
    e0 = exp_2pi_i(_theta(SingularityLabel.ZERO, params))
    e1 = exp_2pi_i(_theta(SingularityLabel.ONE, params))
    einf = exp_2pi_i(_theta(SingularityLabel.INFINITY, params))
    M0 = np.linalg.solve(c0, e0 @ c0)
    M1 = np.linalg.solve(c1, e1 @ c1)
    return GaussMonodromyData(M0, M1, einf)


def kummer_monodromy(params: Params) -> KummerMonodromyData:
    ct = kummer_connection(params)
    e0 = exp_2pi_i(_theta(SingularityLabel.ZERO, params, EquationFamily.KUMMER))
    M0 = np.linalg.solve(ct, e0 @ ct)
    S0, Sm1 = kummer_stokes(params)
    return KummerMonodromyData(M0, S0, Sm1)


def kummer_monodromy_infinity(params: Params) -> np.ndarray:
    """S~_0 e^{2 pi i Theta~_inf} S~_{-1}, the monodromy around infinity."""
    S0, Sm1 = kummer_stokes(params)
    einf = exp_2pi_i(_theta(SingularityLabel.INFINITY, params, EquationFamily.KUMMER))
    return S0 @ einf @ Sm1
