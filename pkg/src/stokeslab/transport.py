"""Numerical analytic continuation: the independent ground truth.

Adaptive embedded Runge-Kutta 5(4) integration of the 2x2 systems along
piecewise linear/circular paths in the complex plane, producing numeric
connection, monodromy and Stokes matrices for comparison with every closed
form.  Columns are transported separately (normalized at the start) so that
exponentially separated column scales do not poison the error control.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .branching import BranchedComplex
from .errors import IllConditionedError, PathError
from .frames import (FrameValue, gauss_frame, kummer_formal_frame,
                     kummer_frame_zero)
from .params import Params
from .systems import (EquationFamily, SingularityLabel, gauss_residues,
                      kummer_residue)

MIN_CLEARANCE = 1e-3
MAX_CONDITION = 1e8


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Line:
    start: complex
    end: complex

    def point(self, t: float) -> complex:
        return self.start + t * (self.end - self.start)

    def velocity(self, t: float) -> complex:
        return self.end - self.start

    @property
    def length(self) -> float:
        return abs(self.end - self.start)

    def clearance(self, p: complex) -> float:
        d = self.end - self.start
        if d == 0.0:
            return abs(p - self.start)
        rel = p - self.start
        t = (rel.real * d.real + rel.imag * d.imag) / abs(d) ** 2
        t = min(1.0, max(0.0, t))
        return abs(p - (self.start + t * d))


@dataclass(frozen=True)
class Arc:
    center: complex
    radius: float
    arg_start: float
    arg_end: float   # signed sweep; arg_end < arg_start runs clockwise

    def point(self, t: float) -> complex:
        th = self.arg_start + t * (self.arg_end - self.arg_start)
        return self.center + self.radius * cmath.exp(1j * th)

    def velocity(self, t: float) -> complex:
        th = self.arg_start + t * (self.arg_end - self.arg_start)
        return 1j * self.radius * (self.arg_end - self.arg_start) * cmath.exp(1j * th)

    @property
    def start(self) -> complex:
        return self.point(0.0)

    @property
    def end(self) -> complex:
        return self.point(1.0)

    @property
    def length(self) -> float:
        return self.radius * abs(self.arg_end - self.arg_start)

    def clearance(self, p: complex) -> float:
        rel = p - self.center
        d = abs(rel)
        lo, hi = sorted((self.arg_start, self.arg_end))
        phi = cmath.phase(rel)
        k0 = math.ceil((lo - phi) / (2 * math.pi))
        k1 = math.floor((hi - phi) / (2 * math.pi))
        if k0 <= k1:  # the ray through p meets the swept angles
            return abs(d - self.radius)
        return min(abs(p - self.start), abs(p - self.end))


@dataclass(frozen=True)
class PathSpec:
    pieces: tuple
    max_step: float = math.inf
    tol: float = 1e-12

    def __post_init__(self):
        for a, b in zip(self.pieces[:-1], self.pieces[1:]):
            if abs(a.end - b.start) > 1e-9 * max(1.0, abs(a.end)):
                raise PathError(f"path pieces do not chain: {a.end} != {b.start}")

    @property
    def start(self) -> complex:
        return self.pieces[0].start

    @property
    def end(self) -> complex:
        return self.pieces[-1].end

    def clearance(self, singularities) -> float:
        return min(
            piece.clearance(s) for piece in self.pieces for s in singularities
        )


def polyline(*points, max_step: float = math.inf, tol: float = 1e-12) -> PathSpec:
    pieces = tuple(Line(complex(p), complex(q)) for p, q in zip(points[:-1], points[1:]))
    return PathSpec(pieces, max_step, tol)


def loop_path(center: complex, radius: float, base: complex,
              turns: float = 1.0, tol: float = 1e-12) -> PathSpec:
    """Straight run from base to the circle, ``turns`` counterclockwise turns,
    and the straight run back."""
    rel = base - center
    th0 = cmath.phase(rel)
    start = center + radius * rel / abs(rel)
    pieces = (
        Line(base, start),
        Arc(center, radius, th0, th0 + 2 * math.pi * turns),
        Line(start, base),
    )
    return PathSpec(pieces, tol=tol)


# ---------------------------------------------------------------------------
# the embedded 5(4) pair
# ---------------------------------------------------------------------------

_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200,
          187 / 2100, 1 / 40)
_DP_E = tuple(b5 - b4 for b5, b4 in zip(_DP_B5, _DP_B4))


@dataclass
class TransportResult:
    matrix: np.ndarray
    step_count: int
    err_estimate: float


def _integrate_column(rhs, piece, y0: np.ndarray, tol: float, max_step: float):
    """One path piece, one 2-vector column.  Returns (y, steps, rel_err_sum)."""
    t = 0.0
    y = y0
    h = min(0.1, max_step / max(piece.length, 1e-300))
    k1 = rhs(piece, t, y)
    steps = 0
    rel_err = 0.0
    min_h = 1e-13
    while t < 1.0:
        h = min(h, 1.0 - t)
        if h < min_h:
            raise PathError(
                f"step collapse near {piece.point(t)}: required step {h} too small"
            )
        ks = [k1]
        for i in range(1, 7):
            yi = y + h * sum(a * k for a, k in zip(_DP_A[i], ks))
            ks.append(rhs(piece, t + h * sum(_DP_A[i]), yi))
        y_new = y + h * sum(b * k for b, k in zip(_DP_B5, ks))
        err_vec = h * sum(e * k for e, k in zip(_DP_E, ks))
        scale = tol * max(np.linalg.norm(y), np.linalg.norm(y_new), 1e-300)
        err = np.linalg.norm(err_vec) / scale
        if err <= 1.0:
            t += h
            y = y_new
            k1 = ks[6]  # FSAL
            steps += 1
            rel_err += np.linalg.norm(err_vec) / max(np.linalg.norm(y_new), 1e-300)
        factor = 0.9 * err ** -0.2 if err > 0 else 5.0
        h *= min(5.0, max(0.2, factor))
        h = min(h, max_step / max(piece.length, 1e-300))
    return y, steps, rel_err


def transport(path: PathSpec, family: EquationFamily, params: Params,
              Y0: np.ndarray, tol: float | None = None) -> TransportResult:
    """Continue the frame Y0 along the path by integrating Y' = A(.) Y."""
    tol = path.tol if tol is None else tol
    if family is EquationFamily.GAUSS:
        A0, A1 = gauss_residues(params)
        sings = (0.0, 1.0)

        def rhs(piece, t, y):
            w = piece.point(t)
            return piece.velocity(t) * (A0 @ y / w + A1 @ y / (w - 1.0))
    else:
        At0 = kummer_residue(params)
        E = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
        sings = (0.0,)

        def rhs(piece, t, y):
            w = piece.point(t)
            return piece.velocity(t) * (E @ y + At0 @ y / w)

    clearance = path.clearance(sings)
    if clearance < MIN_CLEARANCE:
        raise PathError(
            f"path clearance {clearance:.2e} below the minimum {MIN_CLEARANCE}"
        )

    Y0 = np.asarray(Y0, dtype=complex)
    cols, steps, err = [], 0, 0.0
    for j in range(2):
        v = Y0[:, j].copy()
        sc = np.max(np.abs(v))
        if sc == 0.0:
            raise PathError("transport seed has a zero column")
        v = v / sc
        rel = 0.0
        for piece in path.pieces:
            if piece.length == 0.0:
                continue
            v, st, re_ = _integrate_column(rhs, piece, v, tol, path.max_step)
            steps += st
            rel += re_
        cols.append(v * sc)
        err = max(err, rel * np.max(np.abs(v * sc)))
    return TransportResult(np.column_stack(cols), steps, err)


# ---------------------------------------------------------------------------
# frame seeds
# ---------------------------------------------------------------------------

class FrameKind(enum.Enum):
    GAUSS_ZERO = "gauss0"
    GAUSS_ONE = "gauss1"
    GAUSS_INF = "gaussinf"
    KUMMER_ZERO = "kummer0"
    KUMMER_FORMAL = "kummerformal"


@dataclass(frozen=True)
class FrameSpec:
    kind: FrameKind
    at: BranchedComplex


def evaluate_frame(spec: FrameSpec, params: Params, tol: float = 1e-13) -> FrameValue:
    if spec.kind is FrameKind.GAUSS_ZERO:
        return gauss_frame(SingularityLabel.ZERO, spec.at, params, tol)
    if spec.kind is FrameKind.GAUSS_ONE:
        return gauss_frame(SingularityLabel.ONE, spec.at, params, tol)
    if spec.kind is FrameKind.GAUSS_INF:
        return gauss_frame(SingularityLabel.INFINITY, spec.at, params, tol)
    if spec.kind is FrameKind.KUMMER_ZERO:
        return kummer_frame_zero(spec.at, params, tol)
    return kummer_formal_frame(spec.at, params)


def _family_of(kind: FrameKind) -> EquationFamily:
    if kind in (FrameKind.KUMMER_ZERO, FrameKind.KUMMER_FORMAL):
        return EquationFamily.KUMMER
    return EquationFamily.GAUSS


def numeric_connection(from_spec: FrameSpec, to_spec: FrameSpec,
                       path: PathSpec, params: Params) -> np.ndarray:
    """Solve  continued[from] = to . C  for the connection matrix C."""
    family = _family_of(from_spec.kind)
    if _family_of(to_spec.kind) is not family:
        raise PathError("connection endpoints belong to different equation families")
    if abs(path.start - from_spec.at.value) > 1e-9:
        raise PathError("path must start at the from-frame seed point")
    if abs(path.end - to_spec.at.value) > 1e-9:
        raise PathError("path must end at the to-frame evaluation point")

    seed = evaluate_frame(from_spec, params).matrix
    moved = transport(path, family, params, seed).matrix
    target = evaluate_frame(to_spec, params).matrix
    cond = np.linalg.cond(target)
    if cond > MAX_CONDITION:
        raise IllConditionedError(f"target frame condition number {cond:.2e}")
    return np.linalg.solve(target, moved)


def numeric_monodromy(loop: PathSpec, base_spec: FrameSpec,
                      params: Params) -> np.ndarray:
    """The matrix M with  continued-around-loop[Y] = Y . M."""
    family = _family_of(base_spec.kind)
    seed = evaluate_frame(base_spec, params).matrix
    moved = transport(loop, family, params, seed).matrix
    return np.linalg.solve(seed, moved)


# ---------------------------------------------------------------------------
# canonical oracle geometries
# ---------------------------------------------------------------------------

GAUSS_BASEPOINT = complex(-2.0, 0.0)


def gauss_connection_setup(which: str, params: Params):
    """Frame specs and continuation curve reproducing the printed Gauss
    connection matrices: the curve from the outer region passes above both
    finite singularities."""
    x_from = BranchedComplex(complex(-3.0), -math.pi)  # arg(-x) = 0
    from_spec = FrameSpec(FrameKind.GAUSS_INF, x_from)
    if which == "0inf":
        to_spec = FrameSpec(FrameKind.GAUSS_ZERO, BranchedComplex(0.4 + 0j, 0.0))
        path = polyline(-3.0, -1.5 + 1.2j, 0.2 + 0.9j, 0.4)
    elif which == "1inf":
        to_spec = FrameSpec(FrameKind.GAUSS_ONE, BranchedComplex(0.6 + 0j, 0.0))
        path = polyline(-3.0, -1.5 + 1.2j, 0.6 + 1.0j, 0.6)
    else:
        raise ValueError(f"no oracle geometry for connection {which!r}")
    return from_spec, to_spec, path


def gauss_loop(which: int, tol: float = 1e-12) -> PathSpec:
    """Monodromy loops based at the outer basepoint, both counterclockwise;
    the loop around 1 approaches through the upper half plane."""
    if which == 0:
        return loop_path(0.0, 0.4, GAUSS_BASEPOINT, tol=tol)
    if which != 1:
        raise ValueError("gauss loops encircle 0 or 1")
    way = [GAUSS_BASEPOINT, -0.9 + 0.8j, 1.0 + 0.8j]
    start = 1.0 + 0.4j
    pieces = [Line(p, q) for p, q in zip(way[:-1], way[1:])]
    pieces.append(Line(way[-1], start))
    pieces.append(Arc(1.0, 0.4, math.pi / 2, math.pi / 2 + 2 * math.pi))
    pieces.append(Line(start, way[-1]))
    pieces.extend(Line(q, p) for q, p in zip(way[::-1][:-1], way[::-1][1:]))
    return PathSpec(tuple(pieces), tol=tol)


def kummer_connection_setup(params: Params, seed_radius: float = 200.0):
    """Seed the sectorial frame on the bisector of its sector (where the two
    exponential scales are balanced), go radially inward, then to the
    evaluation point of the frame at 0."""
    at = BranchedComplex.from_polar(seed_radius, math.pi / 2)
    from_spec = FrameSpec(FrameKind.KUMMER_FORMAL, at)
    to_spec = FrameSpec(FrameKind.KUMMER_ZERO, BranchedComplex(0.5 + 0j, 0.0))
    path = polyline(at.value, 2.0j, 0.3 + 1.2j, 0.5)
    return from_spec, to_spec, path


def kummer_loop(params: Params, seed_radius: float = 200.0,
                loop_radius: float = 2.0, tol: float = 1e-12):
    """Inward run plus a counterclockwise circle around 0, as one path."""
    at = BranchedComplex.from_polar(seed_radius, math.pi / 2)
    base_spec = FrameSpec(FrameKind.KUMMER_FORMAL, at)
    th0 = math.pi / 2
    pieces = (
        Line(at.value, loop_radius * 1j),
        Arc(0.0, loop_radius, th0, th0 + 2 * math.pi),
        Line(loop_radius * 1j, at.value),
    )
    return base_spec, PathSpec(pieces, tol=tol)


def numeric_kummer_monodromy_zero(params: Params, seed_radius: float = 200.0,
                                  tol: float = 1e-12) -> np.ndarray:
    base_spec, path = kummer_loop(params, seed_radius, tol=tol)
    # the closing inward/outward runs cancel, so the loop result is the
    # monodromy of the sectorial frame itself
    return numeric_monodromy(path, base_spec, params)


def numeric_stokes(k: int, params: Params, seed_radius: float = 200.0,
                   match_radius: float = 2.0, tol: float = 1e-12) -> np.ndarray:
    """Numeric Stokes matrix from sectorial frames.

    Seeds the frames of sectors k and k+1 on their bisecting rays at
    |z| = seed_radius (where the optimal-truncation error underflows any
    practical tolerance), transports both inward along their rays and around
    to the midray of the overlap, and solves frame_k . S = frame_{k+1}.
    """
    if k not in (0, -1):
        raise ValueError("Stokes index must be 0 or -1")

    def true_frame(sector: int, arg_target: float) -> np.ndarray:
        arg_seed = sector * math.pi + math.pi / 2  # sector bisector
        at = BranchedComplex.from_polar(seed_radius, arg_seed)
        seed = kummer_formal_frame(at, params)
        if seed.err_estimate > 1e-9:
            raise PathError(
                f"formal-frame seed error {seed.err_estimate:.2e} too large at "
                f"|z| = {seed_radius}"
            )
        pieces = (
            Line(at.value, match_radius * cmath.exp(1j * arg_seed)),
            Arc(0.0, match_radius, arg_seed, arg_target),
        )
        path = PathSpec(pieces, tol=tol)
        return transport(path, EquationFamily.KUMMER, params, seed.matrix).matrix

    arg_overlap = k * math.pi + math.pi  # midray of the overlap sector
    F_low = true_frame(k, arg_overlap)
    F_high = true_frame(k + 1, arg_overlap)
    cond = np.linalg.cond(F_low)
    if cond > MAX_CONDITION:
        raise IllConditionedError(f"matching frame condition number {cond:.2e}")
    return np.linalg.solve(F_low, F_high)
