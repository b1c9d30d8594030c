"""Complex numbers with an explicitly chosen argument.

Every non-integer power in this package is computed as
``exp(mu * (log|w| + i*arg))`` with ``arg`` carried as data.  The half-open
argument windows attached to the local solution domains are the entire
content of sheet choice, so they are explicit rather than an ambient
convention.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

_TWO_PI = 2.0 * math.pi


def principal_arg(w: complex) -> float:
    """Argument of ``w`` mapped into the half-open window [-pi, pi)."""
    a = cmath.phase(w)
    return -math.pi if a >= math.pi - 1e-300 else a


def arg_in_window(arg: float, lo: float, hi: float) -> bool:
    """Whether ``arg`` lies in [lo, hi), up to a small rounding slack at lo."""
    return lo - 1e-12 <= arg < hi


def arg_mod_window(arg: float, lo: float, hi: float) -> bool:
    """Whether some 2*pi translate of ``arg`` lies in the open window (lo, hi)."""
    k = math.floor((hi - arg) / _TWO_PI)
    shifted = arg + _TWO_PI * k
    return lo < shifted < hi or lo < shifted + _TWO_PI < hi


@dataclass(frozen=True)
class BranchedComplex:
    """A complex value together with a chosen argument (log sheet)."""

    value: complex
    arg: float

    def __post_init__(self):
        m = abs(self.value)
        if m == 0.0:
            raise DomainError("branched value must be nonzero")
        recon = m * cmath.exp(1j * self.arg)
        if abs(recon - self.value) > 1e-12 * m:
            raise DomainError(
                f"arg {self.arg} does not reconstruct value {self.value}"
            )

    @classmethod
    def principal(cls, w: complex) -> "BranchedComplex":
        return cls(complex(w), principal_arg(complex(w)))

    @classmethod
    def from_polar(cls, modulus: float, arg: float) -> "BranchedComplex":
        return cls(modulus * cmath.exp(1j * arg), arg)

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def log(self) -> complex:
        return complex(math.log(abs(self.value)), self.arg)

    def power(self, mu: complex) -> complex:
        return cmath.exp(mu * self.log)

    def negated(self) -> "BranchedComplex":
        """The point ``-value`` with argument shifted by +-pi into the carried turn."""
        shift = -math.pi if self.arg >= 0.0 else math.pi
        return BranchedComplex(-self.value, self.arg + shift)

    def scaled(self, factor: "BranchedComplex") -> "BranchedComplex":
        """Product with branch arguments added."""
        return BranchedComplex(self.value * factor.value, self.arg + factor.arg)


def cpow(w: complex, mu: complex) -> complex:
    """Principal-window power w**mu via the [-pi, pi) argument."""
    return BranchedComplex.principal(w).power(mu)
