"""The standard map h = (I + Dphi(0) phi)/2 and its certificates.

``h`` conjugates an involution fixing the origin to its linear part there:
h(phi(p)) = Dphi(0) h(p) holds identically whenever phi is an involution.
Global linearization additionally needs h injective, which the spectral
conditions guarantee; the scan here is the empirical counterpart.  It is a
falsification instrument: a reported collision is decisive, while
"no collision found" only certifies the scanned grid.

The auxiliary map g = Dphi(0) + phi satisfies h = Dphi(0) g / 2 and, for
orientation-preserving involutions with linear part -I, the shifted
spectrum identity Spc(Dg(p)) = Spc(Dphi(p)) - 1, which
:func:`spectrum_shift_check` verifies numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .expr import PlanarMap
from .involution import BasePointError, Region, default_region
from .linalg2 import IDENTITY, MINUS_IDENTITY, Mat2, eigenvalues, set_distance

NO_COLLISION_FOUND = "NoCollisionFound"
COLLISION = "Collision"


class NotApplicableError(ValueError):
    """An operation's structural precondition does not hold for this map."""


@dataclass(frozen=True)
class StandardMap:
    """Derived map h(p) = (p + Dphi(0) phi(p)) / 2 with its linear part.

    ``evaluate_with_jacobian`` computes Dh(p) = (I + Dphi(0) Dphi(p)) / 2
    from the base map's propagated Jacobian; :meth:`as_planar_map` instead
    routes derivative propagation through the composed expression, giving
    an independent second route for cross-checks.
    """

    base: PlanarMap
    linear_part: Mat2  # Dphi(0)

    def evaluate(self, p: tuple[float, float]) -> tuple[float, float]:
        fx, fy = self.base.evaluate(p)
        ax, ay = self.linear_part.apply((fx, fy))
        return (0.5 * (p[0] + ax), 0.5 * (p[1] + ay))

    def evaluate_with_jacobian(
        self, p: tuple[float, float]
    ) -> tuple[tuple[float, float], Mat2]:
        (fx, fy), jac = self.base.evaluate_with_jacobian(p)
        ax, ay = self.linear_part.apply((fx, fy))
        value = (0.5 * (p[0] + ax), 0.5 * (p[1] + ay))
        return value, (IDENTITY + self.linear_part @ jac).scale(0.5)

    def auxiliary(self, p: tuple[float, float]) -> tuple[float, float]:
        """g(p) = Dphi(0) p + phi(p)."""
        fx, fy = self.base.evaluate(p)
        ax, ay = self.linear_part.apply(p)
        return (ax + fx, ay + fy)

    def auxiliary_jacobian(self, p: tuple[float, float]) -> Mat2:
        """Dg(p) = Dphi(0) + Dphi(p)."""
        _, jac = self.base.evaluate_with_jacobian(p)
        return self.linear_part + jac

    def as_planar_map(self) -> PlanarMap:
        a = self.linear_part

        def fn(x, y):
            u, v = self.base.components(x, y)
            return (
                (x + a.a11 * u + a.a12 * v) * 0.5,
                (y + a.a21 * u + a.a22 * v) * 0.5,
            )

        return PlanarMap.from_function(fn, f"standard({self.base.source})")


@dataclass(frozen=True)
class InjectivityCertificate:
    status: str  # NO_COLLISION_FOUND or COLLISION
    witness_pair: tuple[tuple[float, float], tuple[float, float]] | None
    cells_checked: int


def standard_map(planar_map: PlanarMap, base_tol: float = 1e-9) -> StandardMap:
    """Build h for a map fixing the origin (within ``base_tol``)."""
    v0 = planar_map.evaluate((0.0, 0.0))
    drift = math.hypot(v0[0], v0[1])
    if drift > base_tol:
        raise BasePointError(
            f"the standard map needs the origin fixed, but |phi(0)| = {drift:.3e}; "
            "recenter the map at a fixed point first"
        )
    _, linear_part = planar_map.evaluate_with_jacobian((0.0, 0.0))
    return StandardMap(planar_map, linear_part)


def conjugacy_residual(h: StandardMap, p: tuple[float, float]) -> float:
    """||h(phi(p)) - Dphi(0) h(p)|| / (1 + ||p||); zero for true involutions."""
    fp = h.base.evaluate(p)
    left = h.evaluate(fp)
    right = h.linear_part.apply(h.evaluate(p))
    return math.hypot(left[0] - right[0], left[1] - right[1]) / (1.0 + math.hypot(p[0], p[1]))


def injectivity_scan(
    h,
    region: Region | None = None,
    scan_n: int = 201,
    collision_tol: float = 1e-6,
    separation_min: float | None = None,
) -> InjectivityCertificate:
    """Search a scan_n x scan_n grid for two well-separated points with
    (almost) the same image.

    Images are bucketed into square cells of side ``collision_tol`` and
    only the 3x3 cell neighborhood is compared, so no pair within the
    tolerance can be missed.  A pair counts as a collision when the images
    are within ``collision_tol`` but the sources are at least
    ``separation_min`` apart (default: 1e-3 of the window diameter), which
    screens out adjacent grid points with nearby images.  The first
    qualifying pair in scan order is reported.

    ``h`` may be any object with an ``evaluate((x, y))`` method.
    """
    region = region or default_region()
    if scan_n < 2:
        raise ValueError("scan_n must be at least 2")
    if separation_min is None:
        separation_min = 1e-3 * region.diameter
    scan = region.with_grid(scan_n)
    cell = collision_tol
    buckets: dict[tuple[int, int], list[int]] = {}
    points: list[tuple[float, float]] = []
    images: list[tuple[float, float]] = []
    for p in scan.nodes():
        u, v = h.evaluate(p)
        ci = math.floor(u / cell)
        cj = math.floor(v / cell)
        best = None
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                for idx in buckets.get((ci + di, cj + dj), ()):
                    iu, iv = images[idx]
                    if math.hypot(u - iu, v - iv) > collision_tol:
                        continue
                    q = points[idx]
                    if math.hypot(p[0] - q[0], p[1] - q[1]) < separation_min:
                        continue
                    if best is None or idx < best:
                        best = idx
        if best is not None:
            return InjectivityCertificate(COLLISION, (points[best], p), len(buckets))
        idx = len(points)
        points.append(p)
        images.append((u, v))
        buckets.setdefault((ci, cj), []).append(idx)
    return InjectivityCertificate(NO_COLLISION_FOUND, None, len(buckets))


def spectrum_shift_check(planar_map: PlanarMap, region: Region | None = None) -> float:
    """Max deviation over the grid between Spc(Dg(p)) and Spc(Dphi(p)) - 1.

    Applies to orientation-preserving involutions with Dphi(0) = -I; both
    eigenvalue sets are compared as unordered pairs.
    """
    region = region or default_region()
    _, linear_part = planar_map.evaluate_with_jacobian((0.0, 0.0))
    if (linear_part - MINUS_IDENTITY).max_abs() > 1e-9:
        raise NotApplicableError(
            "the spectrum shift identity needs Dphi(0) = -I; "
            f"got linear part {linear_part.rows()}"
        )
    worst = 0.0
    for p in region.nodes():
        _, jac = planar_map.evaluate_with_jacobian(p)
        spec_g = eigenvalues(linear_part + jac)
        spec_shifted = eigenvalues(jac).shifted(-1.0)
        worst = max(worst, set_distance(spec_g, spec_shifted))
    return worst


@dataclass(frozen=True)
class JacobianBounds:
    min_trace: float
    min_det: float


def theorem_B_jacobian_check(h: StandardMap, region: Region | None = None) -> JacobianBounds:
    """Minimum trace and determinant of Dh over the grid.

    Under the verified trace condition of an orientation-reversing base
    involution both minima are positive (the trace stays above 1/2), which
    is what forces Spc(h) away from (-inf, 0].
    """
    region = region or default_region()
    min_trace = math.inf
    min_det = math.inf
    for p in region.nodes():
        _, dh = h.evaluate_with_jacobian(p)
        min_trace = min(min_trace, dh.trace)
        min_det = min(min_det, dh.det)
    return JacobianBounds(min_trace, min_det)
