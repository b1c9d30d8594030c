"""Builders for the 2x2 first-order systems equivalent to the Gauss and
Kummer equations, the scalar-to-matrix lifts, and the residue eigendata
(residue matrices, their diagonalizers R_k and exponent matrices Theta_k)."""

from __future__ import annotations

import enum

import numpy as np

from .errors import DegenerateParameterError, SingularityError
from .params import Params

SINGULARITY_CLEARANCE = 1e-12


class EquationFamily(enum.Enum):
    GAUSS = "gauss"
    KUMMER = "kummer"


class SingularityLabel(enum.Enum):
    ZERO = 0
    ONE = 1
    INFINITY = 2


def gauss_residues(params: Params) -> tuple[np.ndarray, np.ndarray]:
    """The residue matrices (A_0, A_1) of the Gauss system
    Y' = (A_0/x + A_1/(x-1)) Y."""
    a, b, g = params.alpha, params.beta, params.gamma_
    d = a + 1 - b
    if abs(d) < SINGULARITY_CLEARANCE:
        raise DegenerateParameterError("gauss residues need alpha + 1 - beta != 0")
    A0 = np.array(
        [[a * (b - g), a * (1 - b) * (b - g)],
         [a + 1 - g, (1 - b) * (a + 1 - g)]],
        dtype=complex,
    ) / d
    A1 = np.array(
        [[a * (g - a - 1), a * (b - 1) * (b - g)],
         [g - a - 1, (b - 1) * (b - g)]],
        dtype=complex,
    ) / d
    return A0, A1


def gauss_residue_infinity(params: Params) -> np.ndarray:
    """A_infinity := -A_0 - A_1."""
    A0, A1 = gauss_residues(params)
    return -A0 - A1


def gauss_system(params: Params, x: complex) -> np.ndarray:
    """Coefficient matrix A_0/x + A_1/(x-1) of the Gauss system at x."""
    x = complex(x)
    if abs(x) < SINGULARITY_CLEARANCE or abs(x - 1.0) < SINGULARITY_CLEARANCE:
        raise SingularityError(f"gauss system evaluated at singular point x = {x}")
    A0, A1 = gauss_residues(params)
    return A0 / x + A1 / (x - 1.0)


def kummer_residue(params: Params) -> np.ndarray:
    """The residue matrix at z = 0 of the Kummer system."""
    b, g = params.beta, params.gamma_
    return np.array([[b - g, (1 - b) * (b - g)], [1.0, 1 - b]], dtype=complex)


def kummer_system(params: Params, z: complex) -> np.ndarray:
    """Coefficient matrix diag(1,0) + A~_0/z of the Kummer system at z."""
    z = complex(z)
    if abs(z) < SINGULARITY_CLEARANCE:
        raise SingularityError("kummer system evaluated at singular point z = 0")
    if abs((params.beta - 1) * (params.beta - params.gamma_)) < SINGULARITY_CLEARANCE:
        raise DegenerateParameterError("kummer system needs (beta-1)(beta-gamma) != 0")
    E = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    return E + kummer_residue(params) / z


def psi_lift_gauss(y: complex, yp: complex, x: complex, params: Params) -> complex:
    """Second row of the scalar-to-matrix lift: the column (y, psi) solves the
    Gauss system whenever y solves the scalar Gauss equation."""
    a, b, g = params.alpha, params.beta, params.gamma_
    den = a * (b - 1) * (b - g)
    if abs(den) < SINGULARITY_CLEARANCE:
        raise DegenerateParameterError("gauss lift needs alpha (beta-1)(beta-gamma) != 0")
    return (a * (b - g + (a + 1 - b) * x) * y + x * (x - 1) * (a + 1 - b) * yp) / den


def psi_lift_kummer(y: complex, yp: complex, z: complex, params: Params) -> complex:
    """Kummer analogue of psi_lift_gauss."""
    b, g = params.beta, params.gamma_
    den = (b - 1) * (b - g)
    if abs(den) < SINGULARITY_CLEARANCE:
        raise DegenerateParameterError("kummer lift needs (beta-1)(beta-gamma) != 0")
    return ((z + b - g) * y - z * yp) / den


def residue_frame(label: SingularityLabel, params: Params,
                  family: EquationFamily = EquationFamily.GAUSS):
    """The printed diagonalizer R and exponent matrix Theta at a singularity,
    satisfying R^{-1} A R = Theta for the corresponding residue matrix
    (at infinity, A := -A_0 - A_1 in the Gauss family)."""
    a, b, g = params.alpha, params.beta, params.gamma_
    if family is EquationFamily.GAUSS:
        if label is SingularityLabel.ZERO:
            if abs(a * (b - g)) < SINGULARITY_CLEARANCE or abs(b - 1) < SINGULARITY_CLEARANCE:
                raise DegenerateParameterError("R_0 denominators vanish")
            R = np.array([[1, 1], [(a + 1 - g) / (a * (b - g)), 1 / (b - 1)]],
                         dtype=complex)
            Th = np.diag([1 - g, 0]).astype(complex)
        elif label is SingularityLabel.ONE:
            if abs(a) < SINGULARITY_CLEARANCE or abs((b - 1) * (b - g)) < SINGULARITY_CLEARANCE:
                raise DegenerateParameterError("R_1 denominators vanish")
            R = np.array([[1, 1], [1 / a, (a + 1 - g) / ((b - 1) * (b - g))]],
                         dtype=complex)
            Th = np.diag([g - a - b, 0]).astype(complex)
        else:
            den = a * (b - 1) * (b - g)
            if abs(den) < SINGULARITY_CLEARANCE:
                raise DegenerateParameterError("R_inf denominator vanishes")
            R = np.diag([1, (b - a) * (a + 1 - b) / den]).astype(complex)
            Th = np.diag([a, b - 1]).astype(complex)
        return R, Th

    if label is SingularityLabel.ZERO:
        if abs((b - g) * (b - 1)) < SINGULARITY_CLEARANCE:
            raise DegenerateParameterError("R~_0 denominators vanish")
        R = np.array([[1, 1], [1 / (b - g), 1 / (b - 1)]], dtype=complex)
        Th = np.diag([1 - g, 0]).astype(complex)
    elif label is SingularityLabel.INFINITY:
        den = (b - 1) * (b - g)
        if abs(den) < SINGULARITY_CLEARANCE:
            raise DegenerateParameterError("R~_inf denominator vanishes")
        R = np.diag([1, -1 / den]).astype(complex)
        Th = np.diag([g - b, b - 1]).astype(complex)
    else:
        raise DegenerateParameterError("Kummer family has singularities 0 and infinity only")
    return R, Th


def exp_2pi_i(theta: np.ndarray) -> np.ndarray:
    """e^{2 pi i Theta} for diagonal Theta."""
    return np.diag(np.exp(2j * np.pi * np.diag(theta)))
