"""Equation parameters and their admissibility predicates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParameterError

NONRESONANCE_TOL = 1e-9


def distance_to_integers(z: complex) -> float:
    """Distance from z to the nearest (real) integer in the complex plane."""
    z = complex(z)
    return abs(z - round(z.real))


@dataclass(frozen=True)
class Params:
    """The parameter triple (alpha, beta, gamma).

    Kummer-mode operations only read beta and gamma; alpha doubles as the
    confluence parameter.
    """

    alpha: complex
    beta: complex
    gamma_: complex

    def gauss_nonresonant(self, tol: float = NONRESONANCE_TOL) -> bool:
        a, b, g = self.alpha, self.beta, self.gamma_
        return (
            distance_to_integers(g) > tol
            and distance_to_integers(g - a - b) > tol
            and distance_to_integers(a - b) > tol
        )

    def kummer_nonresonant(self, tol: float = NONRESONANCE_TOL) -> bool:
        return distance_to_integers(self.gamma_) > tol

    def lift_conditions(self, tol: float = NONRESONANCE_TOL) -> bool:
        """Auxiliary conditions for the scalar-to-matrix lift:
        alpha != 0, beta not in {1, gamma}, alpha != beta - 1."""
        a, b, g = self.alpha, self.beta, self.gamma_
        return (
            abs(a) > tol
            and abs(b - 1.0) > tol
            and abs(b - g) > tol
            and abs(a - b + 1.0) > tol
        )

    def require_gauss(self, tol: float = NONRESONANCE_TOL) -> "Params":
        if not self.gauss_nonresonant(tol):
            raise DegenerateParameterError(
                f"resonant Gauss parameters: gamma={self.gamma_}, "
                f"gamma-alpha-beta={self.gamma_ - self.alpha - self.beta}, "
                f"alpha-beta={self.alpha - self.beta} too close to an integer"
            )
        if not self.lift_conditions(tol):
            raise DegenerateParameterError(
                "lift conditions violated: need alpha != 0, beta not in {1, gamma}, "
                "alpha != beta - 1"
            )
        return self

    def require_kummer(self, tol: float = NONRESONANCE_TOL) -> "Params":
        if not self.kummer_nonresonant(tol):
            raise DegenerateParameterError(
                f"resonant Kummer parameters: gamma={self.gamma_} too close to an integer"
            )
        if abs(self.beta - 1.0) <= tol or abs(self.beta - self.gamma_) <= tol:
            raise DegenerateParameterError(
                "Kummer lift needs (beta-1)(beta-gamma) != 0"
            )
        return self


# sampling box used by the verification battery and the CLI
SAMPLE_RE = (0.1, 2.0)
SAMPLE_IM = (-0.5, 0.5)
SAMPLE_MARGIN = 0.05


def random_params(rng: np.random.Generator, margin: float = SAMPLE_MARGIN) -> Params:
    """Draw parameters uniformly from the sampling box, rejecting draws whose
    resonance distances fall below ``margin`` (closed-form denominators degrade
    as resonance approaches)."""
    while True:
        re = rng.uniform(*SAMPLE_RE, size=3)
        im = rng.uniform(*SAMPLE_IM, size=3)
        p = Params(complex(re[0], im[0]), complex(re[1], im[1]), complex(re[2], im[2]))
        ok = (
            p.gauss_nonresonant(margin)
            and p.kummer_nonresonant(margin)
            and p.lift_conditions(margin)
            and distance_to_integers(p.beta) > margin
            and distance_to_integers(p.alpha) > margin
            and distance_to_integers(p.gamma_ - p.alpha) > margin
            and distance_to_integers(p.gamma_ - p.beta) > margin
        )
        if ok:
            return p
