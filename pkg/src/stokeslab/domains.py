"""Domains and sectors with explicit branch windows, plus the membership
predicates used by the confluence experiments.

Window conventions: every disk domain pins exactly one argument to the
half-open window [-pi, pi) (of x at 0, of 1-x at 1, of -x at infinity);
the hatted domains pin a second argument; sectors are given by open
argument intervals.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

from .branching import BranchedComplex, arg_in_window, arg_mod_window, principal_arg
from .errors import DomainError

DEFAULT_ETA = math.pi / 6.0
PI = math.pi


class DomainKind(enum.Enum):
    OMEGA_0 = "omega0"            # |x|<1, arg x in [-pi, pi)
    OMEGA_1 = "omega1"            # |x-1|<1, arg(1-x) in [-pi, pi)
    OMEGA_INF = "omegainf"        # |x|>1, arg(-x) in [-pi, pi)
    OMEGA_HAT_1 = "omegahat1"     # |1-1/x|<1, arg x and arg(1-x) in [-pi, pi)
    OMEGA_HAT_INF = "omegahatinf" # |x|>1, arg(-x) and arg(1-x) in [-pi, pi)
    OMEGA_TILDE_0 = "omegatilde0" # arg z in [-3pi/2, pi/2)
    SIGMA_TILDE = "sigmatilde"    # maximal sector: arg z - k pi in (-pi/2, 3pi/2)
    PI_TILDE = "pitilde"          # overlap: arg z - k pi in (pi/2, 3pi/2)
    SCRIPT_S = "scripts"          # Glutsyuk sector: arg z - k pi in (eta-pi/2, 3pi/2-eta)
    SECTOR_ALPHA = "sectoralpha"  # sector attached to the moving singularity
    SECTOR_INF = "sectorinf"      # sector attached to infinity


@dataclass(frozen=True)
class DomainSpec:
    kind: DomainKind
    k: int = 0
    alpha: complex | None = None
    eta: float = DEFAULT_ETA

    def contains(self, z) -> bool:
        return contains(self, z)


def _carried_arg(z) -> tuple[complex, float | None]:
    if isinstance(z, BranchedComplex):
        return z.value, z.arg
    return complex(z), None


def contains(spec: DomainSpec, z) -> bool:
    """Membership of z in the domain.

    For a BranchedComplex the carried argument is tested against the
    window; for a bare complex the projected set is tested with principal
    arguments (sectors accept any 2*pi translate).
    """
    v, carg = _carried_arg(z)
    kind, k, eta = spec.kind, spec.k, spec.eta

    if kind is DomainKind.OMEGA_0:
        ok = abs(v) < 1.0
        if carg is not None:
            ok = ok and arg_in_window(carg, -PI, PI)
        return ok
    if kind is DomainKind.OMEGA_1:
        return abs(v - 1.0) < 1.0
    if kind is DomainKind.OMEGA_INF:
        return abs(v) > 1.0
    if kind is DomainKind.OMEGA_HAT_1:
        return abs(1.0 - 1.0 / v) < 1.0
    if kind is DomainKind.OMEGA_HAT_INF:
        return abs(v) > 1.0
    if kind is DomainKind.OMEGA_TILDE_0:
        if carg is not None:
            return arg_in_window(carg, -1.5 * PI, 0.5 * PI)
        return True  # projects onto the punctured plane
    if kind is DomainKind.SIGMA_TILDE:
        lo, hi = k * PI - 0.5 * PI, k * PI + 1.5 * PI
    elif kind is DomainKind.PI_TILDE:
        lo, hi = k * PI + 0.5 * PI, k * PI + 1.5 * PI
    elif kind is DomainKind.SCRIPT_S:
        lo, hi = k * PI + eta - 0.5 * PI, k * PI + 1.5 * PI - eta
    elif kind is DomainKind.SECTOR_ALPHA:
        return _in_sector_alpha(spec, v)
    elif kind is DomainKind.SECTOR_INF:
        return _in_sector_inf(spec, v)
    else:
        raise DomainError(f"unknown domain kind {kind}")

    if carg is not None:
        return lo < carg < hi
    return arg_mod_window(cmath.phase(v), lo, hi)


def _require_alpha(spec: DomainSpec) -> complex:
    if spec.alpha is None:
        raise DomainError(f"{spec.kind} needs the confluence parameter alpha")
    return complex(spec.alpha)


def _in_sector_alpha(spec: DomainSpec, z: complex) -> bool:
    al = _require_alpha(spec)
    eta = spec.eta
    if z == 0.0:
        return False
    cond_radius = abs(1.0 - al / z) < abs(al) ** 2
    a1 = principal_arg(z / al)
    a2 = principal_arg(1.0 - z / al)
    return (
        cond_radius
        and eta - PI < a1 < PI - eta
        and eta - PI < a2 < PI - eta
    )


def _in_sector_inf(spec: DomainSpec, z: complex) -> bool:
    al = _require_alpha(spec)
    eta = spec.eta
    if z == 0.0:
        return False
    a1 = principal_arg(-z / al)
    a2 = principal_arg(1.0 - z / al)
    return eta - PI < a1 < PI - eta and eta - PI < a2 < PI - eta


def sector_membership(domain: DomainSpec, z, alpha: complex | None = None) -> bool:
    """Membership predicate; a given alpha overrides the one in the spec."""
    if alpha is not None:
        domain = DomainSpec(domain.kind, domain.k, alpha, domain.eta)
    return contains(domain, z)
