"""Sampled spectrum of a planar involution and the linearization conditions.

The spectrum of a map is the set of eigenvalues of its Jacobian over all
points; here it is sampled over a bounded window, so every verdict is
window-qualified and never claims a global "for all p".

For an orientation-preserving involution fixing the origin the standard
map is a global linearization under any of:

  (a) every eigenvalue equals 1 (the map is the identity),
  (b) no real eigenvalue lies in [1, 1 + eps) for the chosen eps, or
  (c) every sampled eigenvalue is real.

For an orientation-reversing involution the criterion is the trace
condition: Trace(Dphi(0) Dphi(p)) > -1 at every sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .expr import PlanarMap
from .involution import (
    ORIENTATION_PRESERVING,
    OrientationClass,
    Region,
    base_fixed_point,
    default_region,
    orientation,
)
from .linalg2 import Spectrum, eigenvalues

COND_A_IDENTITY = "A-a"
COND_A_GAP = "A-b"
COND_A_REAL = "A-c"
COND_B_TRACE = "B-trace"


@dataclass(frozen=True)
class SpectrumSample:
    point: tuple[float, float]
    spectrum: Spectrum
    trace_product: float  # Trace(Dphi(base) @ Dphi(point))


@dataclass(frozen=True)
class ConditionVerdict:
    condition: str
    holds_on_window: bool
    witness: SpectrumSample | None  # violating sample, present iff the condition fails
    margin: float


@dataclass(frozen=True)
class TheoremAChecks:
    a: ConditionVerdict
    b: ConditionVerdict
    c: ConditionVerdict

    def as_list(self) -> list[ConditionVerdict]:
        return [self.a, self.b, self.c]


@dataclass(frozen=True)
class SpectralAssessment:
    orientation: OrientationClass
    base_point: tuple[float, float]
    conditions: list[ConditionVerdict]
    verdict: str
    linearizable_on_window: bool


def sample_spectrum(
    planar_map: PlanarMap,
    region: Region | None = None,
    base: tuple[float, float] | None = None,
) -> list[SpectrumSample]:
    """One spectrum sample per grid node, in deterministic grid order.

    The linear part entering the trace product is evaluated once, at the
    origin if it is fixed, else at the FixMinus point found from it.
    """
    region = region or default_region()
    if base is None:
        base = base_fixed_point(planar_map)
    _, linear_part = planar_map.evaluate_with_jacobian(base)
    samples = []
    for p in region.nodes():
        _, jac = planar_map.evaluate_with_jacobian(p)
        samples.append(SpectrumSample(p, eigenvalues(jac), (linear_part @ jac).trace))
    return samples


def _eigen_iter(sample: SpectrumSample):
    yield sample.spectrum.lambda1
    yield sample.spectrum.lambda2


def _distance_to_band(lam: complex, epsilon: float) -> float:
    """Euclidean distance from an eigenvalue to the real segment [1, 1+eps]."""
    re, im = lam.real, lam.imag
    if re < 1.0:
        dx = 1.0 - re
    elif re > 1.0 + epsilon:
        dx = re - (1.0 + epsilon)
    else:
        dx = 0.0
    return math.hypot(dx, im)


def check_condition_A(
    samples: list[SpectrumSample],
    epsilon: float = 0.1,
    im_tol: float = 1e-9,
    one_tol: float = 1e-9,
) -> TheoremAChecks:
    """Evaluate the three orientation-preserving hypotheses on the samples.

    Margins are signed distances to the respective decision boundary:

    * (a): ``one_tol - max |lambda - 1|``; non-negative iff it holds.
    * (b): when it holds, the smallest distance from any eigenvalue to the
      real segment [1, 1+eps]; when it fails, ``(Re lambda* - 1) - eps``
      where lambda* is the binding violator, i.e. how much eps would have
      to shrink for the violation to clear.
    * (c): ``im_tol - max |Im lambda|``; non-negative iff it holds.

    The witness reported for (b) is the violating sample whose eigenvalue
    sits lowest in the band: that eigenvalue falsifies the hypothesis for
    every smaller eps as well, so it is the binding counterexample.
    """
    max_dev_one = 0.0
    witness_a = None
    max_imag = 0.0
    witness_c = None
    min_band_dist = math.inf
    binding_re = math.inf
    witness_b = None
    for sample in samples:
        for lam in _eigen_iter(sample):
            dev = abs(lam - 1.0)
            if dev > max_dev_one:
                max_dev_one = dev
            if witness_a is None and dev > one_tol:
                witness_a = sample
            im = abs(lam.imag)
            if im > max_imag:
                max_imag = im
            if witness_c is None and im > im_tol:
                witness_c = sample
            violates_b = im <= im_tol and 1.0 <= lam.real < 1.0 + epsilon
            if violates_b:
                if lam.real < binding_re:
                    binding_re = lam.real
                    witness_b = sample
            else:
                min_band_dist = min(min_band_dist, _distance_to_band(lam, epsilon))
    a_holds = max_dev_one <= one_tol
    c_holds = max_imag <= im_tol
    b_holds = witness_b is None
    verdict_a = ConditionVerdict(
        COND_A_IDENTITY, a_holds, None if a_holds else witness_a, one_tol - max_dev_one
    )
    if b_holds:
        margin_b = min_band_dist if min_band_dist < math.inf else math.inf
        verdict_b = ConditionVerdict(COND_A_GAP, True, None, margin_b)
    else:
        verdict_b = ConditionVerdict(COND_A_GAP, False, witness_b, (binding_re - 1.0) - epsilon)
    verdict_c = ConditionVerdict(
        COND_A_REAL, c_holds, None if c_holds else witness_c, im_tol - max_imag
    )
    return TheoremAChecks(verdict_a, verdict_b, verdict_c)


def check_condition_B(samples: list[SpectrumSample]) -> ConditionVerdict:
    """Trace condition for orientation-reversing involutions.

    Holds iff min Trace(Dphi(0) Dphi(p)) > -1; the margin is that minimum
    plus one, so a margin of 3 means the trace never dropped below 2.
    """
    min_tp = math.inf
    witness = None
    for sample in samples:
        if sample.trace_product < min_tp:
            min_tp = sample.trace_product
        if witness is None and sample.trace_product <= -1.0:
            witness = sample
    holds = min_tp > -1.0
    return ConditionVerdict(COND_B_TRACE, holds, None if holds else witness, min_tp + 1.0)


def _window_str(region: Region) -> str:
    return (f"[{region.x_min:g}, {region.x_max:g}] x "
            f"[{region.y_min:g}, {region.y_max:g}]")


def theorem_verdict(
    planar_map: PlanarMap,
    region: Region | None = None,
    epsilon: float = 0.1,
    im_tol: float = 1e-9,
    one_tol: float = 1e-9,
) -> SpectralAssessment:
    """Decide which linearization hypothesis (if any) holds on the window.

    Orientation-preserving maps are linearizable on the window iff (a),
    (b), or (c) holds; orientation-reversing maps iff the trace condition
    holds.  The verdict string names the condition used and the window it
    was sampled on.
    """
    region = region or default_region()
    orient = orientation(planar_map, region)
    base = base_fixed_point(planar_map)
    samples = sample_spectrum(planar_map, region, base)
    win = _window_str(region)
    if orient.kind == ORIENTATION_PRESERVING:
        checks = check_condition_A(samples, epsilon, im_tol, one_tol)
        conditions = checks.as_list()
        if checks.a.holds_on_window:
            verdict = f"Theorem A(a) applies on {win} (every sampled eigenvalue is 1: the map is the identity there)"
            ok = True
        elif checks.c.holds_on_window:
            verdict = f"Theorem A(c) applies on {win} (all sampled eigenvalues are real)"
            ok = True
        elif checks.b.holds_on_window:
            verdict = f"Theorem A(b) applies on {win} (no eigenvalue in [1, 1+{epsilon:g}))"
            ok = True
        else:
            w = checks.b.witness.point
            verdict = (f"no hypothesis verified on {win}; "
                       f"Theorem A(b) violated at ({w[0]:g}, {w[1]:g})")
            ok = False
    else:
        cond_b = check_condition_B(samples)
        conditions = [cond_b]
        if cond_b.holds_on_window:
            verdict = (f"Theorem B applies on {win} "
                       f"(trace condition, margin {cond_b.margin:g})")
            ok = True
        else:
            w = cond_b.witness.point
            verdict = (f"no hypothesis verified on {win}; "
                       f"Theorem B trace condition violated at ({w[0]:g}, {w[1]:g})")
            ok = False
    return SpectralAssessment(orient, base, conditions, verdict, ok)
