"""Invariant foliation tracing: preimages of canonical leaves under h.

A linear involution other than the identity is conjugate to -I (radial
case: the punctured plane foliated by rays) or to (x, y) -> (x, -y)
(vertical case: the plane foliated by vertical lines).  The foliation
induced by an involution phi is the family of h-preimages of those
canonical leaves, where h is the standard map; each leaf is traced as a
polyline by marching along the canonical leaf in the target plane and
pulling every target point back through a Newton inversion of h, seeded
with the previous preimage (predictor-corrector continuation).

Radial leaves start at radius 1e-3, not 0: the origin does not belong to
the radial foliation and the ray equation is undefined there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .expr import PlanarMap
from .involution import Region, default_region
from .linalg2 import IDENTITY, Mat2, is_linear_involution
from .linearize import StandardMap

RADIAL = "radial"
VERTICAL = "vertical"

_RADIAL_START_RADIUS = 1e-3


class InversionError(RuntimeError):
    """Newton inversion of the standard map failed."""

    def __init__(self, reason: str, last_iterate: tuple[float, float]):
        super().__init__(f"{reason} (last iterate ({last_iterate[0]!r}, {last_iterate[1]!r}))")
        self.last_iterate = last_iterate


@dataclass(frozen=True)
class CanonicalFoliation:
    """Canonical foliation of the linear part, with change of basis S.

    S maps eigen-coordinates in: S @ Dphi(0) @ S^{-1} is diag(-1, -1) in
    the radial case and diag(1, -1) in the vertical case.
    """

    kind: str  # RADIAL or VERTICAL
    change_of_basis: Mat2


@dataclass(frozen=True)
class Leaf:
    """Polyline sample of one leaf, tagged with its parameter.

    The parameter is the ray angle (radial) or the constant first
    eigen-coordinate c of S h (vertical).  ``point_residuals`` holds the
    leaf-equation residual at each polyline point; ``truncated`` marks a
    trace cut short by an inversion failure.
    """

    parameter: float
    points: list[tuple[float, float]]
    point_residuals: list[float]
    truncated: bool = False

    @property
    def residual(self) -> float:
        return max(self.point_residuals, default=0.0)


def diagonalize_involution(linear: Mat2, tol: float = 1e-9) -> CanonicalFoliation:
    """Canonical foliation kind and change of basis for a linear involution.

    Raises ValueError for the identity (no canonical foliation of this
    kind; the identity case is handled by the spectral verdict upstream)
    and for matrices that are not involutions within ``tol``.
    """
    if not is_linear_involution(linear, tol):
        raise ValueError("matrix is not a linear involution within tolerance")
    if (linear - IDENTITY).max_abs() <= tol:
        raise ValueError("the identity involution has no canonical foliation of this kind")
    if (linear + IDENTITY).max_abs() <= tol:
        return CanonicalFoliation(RADIAL, IDENTITY)
    if linear.det >= 0.0:
        raise ValueError("linear involution is neither +-I nor orientation-reversing")
    v_plus = _kernel_direction(linear - IDENTITY)
    v_minus = _kernel_direction(linear + IDENTITY)
    s_inv = Mat2(v_plus[0], v_minus[0], v_plus[1], v_minus[1])
    s = s_inv.inverse()
    diag = s @ linear @ s_inv
    if abs(diag.a11 - 1.0) > tol or abs(diag.a22 + 1.0) > tol or \
            abs(diag.a12) > tol or abs(diag.a21) > tol:
        raise ValueError("diagonalization failed to reach diag(1, -1) within tolerance")
    return CanonicalFoliation(VERTICAL, s)


def _kernel_direction(m: Mat2) -> tuple[float, float]:
    """Unit vector spanning the kernel of a rank-one 2x2 matrix.

    The sign is fixed by making the largest-magnitude component positive,
    so an already-diagonal involution gets the identity change of basis.
    """
    rows = m.rows()
    row = max(rows, key=lambda r: r[0] * r[0] + r[1] * r[1])
    norm = math.hypot(row[0], row[1])
    if norm == 0.0:
        raise ValueError("matrix has no one-dimensional kernel")
    vx, vy = row[1] / norm, -row[0] / norm
    if abs(vy) > abs(vx):
        if vy < 0.0:
            vx, vy = -vx, -vy
    elif vx < 0.0:
        vx, vy = -vx, -vy
    return (vx, vy)


def invert_standard_map(
    h: StandardMap,
    target: tuple[float, float],
    guess: tuple[float, float],
    tol: float = 1e-10,
    max_iter: int = 50,
) -> tuple[float, float]:
    """Newton-solve h(p) = target starting from ``guess``.

    Raises :class:`InversionError` on a singular Jacobian or when the
    iteration fails to converge, carrying the last iterate either way.
    """
    p = (float(guess[0]), float(guess[1]))
    for _ in range(max_iter + 1):
        value, dh = h.evaluate_with_jacobian(p)
        rx, ry = target[0] - value[0], target[1] - value[1]
        if math.hypot(rx, ry) <= tol:
            return p
        det = dh.det
        scale = dh.max_abs()
        if abs(det) <= 1e-14 * max(scale * scale, 1e-30):
            raise InversionError("singular Jacobian during inversion", p)
        nx = p[0] + (rx * dh.a22 - dh.a12 * ry) / det
        ny = p[1] + (dh.a11 * ry - dh.a21 * rx) / det
        if not (math.isfinite(nx) and math.isfinite(ny)):
            raise InversionError("inversion iterate became non-finite", p)
        p = (nx, ny)
    raise InversionError(f"no convergence after {max_iter} iterations", p)


def _vertical_anchor(
    h: StandardMap, s: Mat2, c: float, region: Region
) -> tuple[float, tuple[float, float]]:
    """Window node whose first eigen-coordinate is closest to the leaf's c.

    Returns the node's second eigen-coordinate (the march start) and the
    node itself (the first Newton guess)."""
    best = math.inf
    best_t = 0.0
    best_p = (0.0, 0.0)
    for p in region.nodes():
        w = s.apply(h.evaluate(p))
        gap = abs(w[0] - c)
        if gap < best:
            best = gap
            best_t = w[1]
            best_p = p
    return best_t, best_p


def trace_leaf(
    h: StandardMap,
    fol: CanonicalFoliation,
    parameter: float,
    region: Region | None = None,
    step: float = 1e-2,
    inversion_tol: float = 1e-10,
    max_iter: int = 50,
    max_points: int = 20000,
) -> Leaf:
    """Trace one leaf of the induced foliation through the window.

    Radial: the canonical leaf is the ray at angle ``parameter``; the march
    runs outward from radius 1e-3.  Vertical: the canonical leaf is the
    line {first eigen-coordinate = parameter}; the march starts from the
    window point nearest the leaf and runs both ways.  The step lives in
    the target plane and is halved (up to 10 times) when an inversion
    fails; the trace stops once the preimage leaves the window, keeping the
    exit point.
    """
    region = region or default_region()
    if fol.kind == RADIAL:
        angle = float(parameter)
        ca, sa = math.cos(angle), math.sin(angle)

        def target_at(t: float) -> tuple[float, float]:
            return (t * ca, t * sa)

        def residual_at(p: tuple[float, float]) -> float:
            hx, hy = h.evaluate(p)
            return _angle_gap(math.atan2(hy, hx), angle)

        t0 = _RADIAL_START_RADIUS
        guess0 = target_at(t0)
        directions = (1.0,)
    else:
        c = float(parameter)
        s = fol.change_of_basis
        s_inv = s.inverse()

        def target_at(t: float) -> tuple[float, float]:
            return s_inv.apply((c, t))

        def residual_at(p: tuple[float, float]) -> float:
            w = s.apply(h.evaluate(p))
            return abs(w[0] - c)

        t0, guess0 = _vertical_anchor(h, s, c, region)
        directions = (1.0, -1.0)

    try:
        p0 = invert_standard_map(h, target_at(t0), guess0, inversion_tol, max_iter)
    except InversionError:
        return Leaf(parameter, [], [], truncated=True)
    p0_inside = region.contains(p0)

    truncated = False
    branches: list[list[tuple[float, float]]] = []
    for direction in directions:
        pts: list[tuple[float, float]] = []
        t = t0
        p_prev = p0
        step_cur = step
        halvings = 0
        entered = p0_inside
        pre_steps = 0
        approach_stalls = 0
        last_gap = _window_gap(region, p0)
        while len(pts) < max_points:
            t_next = t + direction * step_cur
            try:
                p = invert_standard_map(h, target_at(t_next), p_prev, inversion_tol, max_iter)
            except InversionError:
                halvings += 1
                if halvings > 10:
                    truncated = True
                    break
                step_cur *= 0.5
                continue
            inside = region.contains(p)
            if not entered:
                # anchored just outside the window: walk the leaf until it
                # enters, giving up once it stops approaching
                if inside:
                    entered = True
                    pts.append(p)
                else:
                    gap = _window_gap(region, p)
                    approach_stalls = approach_stalls + 1 if gap >= last_gap else 0
                    last_gap = gap
                    pre_steps += 1
                    if approach_stalls > 25 or pre_steps > 2000:
                        break
            else:
                pts.append(p)
                if not inside:
                    break
            t = t_next
            p_prev = p
        else:
            truncated = True
        branches.append(pts)

    seedpts = [p0] if p0_inside else []
    if fol.kind == RADIAL:
        points = seedpts + branches[0]
    else:
        points = list(reversed(branches[1])) + seedpts + branches[0]
    residuals = [residual_at(p) for p in points]
    return Leaf(parameter, points, residuals, truncated)


def _window_gap(region: Region, p: tuple[float, float]) -> float:
    """Distance from a point to the window box (zero inside)."""
    dx = max(region.x_min - p[0], p[0] - region.x_max, 0.0)
    dy = max(region.y_min - p[1], p[1] - region.y_max, 0.0)
    return math.hypot(dx, dy)


def _angle_gap(a: float, b: float) -> float:
    """Absolute angular distance between two angles, in [0, pi]."""
    d = math.fmod(a - b, 2.0 * math.pi)
    if d < -math.pi:
        d += 2.0 * math.pi
    elif d > math.pi:
        d -= 2.0 * math.pi
    return abs(d)


def leaf_invariance_check(
    planar_map: PlanarMap, h: StandardMap, fol: CanonicalFoliation, leaf: Leaf
) -> float:
    """Max residual of the invariance of the leaf under the involution.

    Vertical case: phi preserves each leaf, so the first eigen-coordinate
    of h is unchanged by composing with phi; the residual is the largest
    difference.  Radial case: h(phi(q)) is the antipode of h(q), so the
    residual is the angular distance between h(phi(q)) and -h(q),
    skipping points whose image is within 1e-6 of the origin.
    """
    worst = 0.0
    if fol.kind == VERTICAL:
        s = fol.change_of_basis
        for q in leaf.points:
            w_q = s.apply(h.evaluate(q))
            w_fq = s.apply(h.evaluate(planar_map.evaluate(q)))
            worst = max(worst, abs(w_fq[0] - w_q[0]))
        return worst
    for q in leaf.points:
        hx, hy = h.evaluate(q)
        if math.hypot(hx, hy) < 1e-6:
            continue
        gx, gy = h.evaluate(planar_map.evaluate(q))
        worst = max(worst, _angle_gap(math.atan2(gy, gx), math.atan2(-hy, -hx)))
    return worst


def canonical_parameter_range(
    h: StandardMap, fol: CanonicalFoliation, region: Region | None = None
) -> tuple[float, float]:
    """Leaf-parameter interval covering the window.

    Radial leaves are parameterized by angle over [0, 2*pi); vertical
    leaves by the range of the first eigen-coordinate of h over the grid.
    """
    region = region or default_region()
    if fol.kind == RADIAL:
        return (0.0, 2.0 * math.pi)
    s = fol.change_of_basis
    lo = math.inf
    hi = -math.inf
    for p in region.nodes():
        w = s.apply(h.evaluate(p))
        lo = min(lo, w[0])
        hi = max(hi, w[0])
    return (lo, hi)


def default_leaf_parameters(
    h: StandardMap,
    fol: CanonicalFoliation,
    region: Region | None = None,
    count: int | None = None,
) -> list[float]:
    """Equispaced leaf parameters: 24 ray angles or 21 vertical constants."""
    if fol.kind == RADIAL:
        count = 24 if count is None else count
        return [2.0 * math.pi * i / count for i in range(count)]
    count = 21 if count is None else count
    lo, hi = canonical_parameter_range(h, fol, region)
    if count == 1:
        return [(lo + hi) / 2.0]
    return [lo + i * (hi - lo) / (count - 1) for i in range(count)]
