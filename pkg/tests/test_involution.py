import math

import pytest

from planarinv.expr import parse
from planarinv.gallery import get
from planarinv.involution import (
    CURVE,
    FIX_MINUS,
    FIX_PLUS,
    ORIENTATION_PRESERVING,
    ORIENTATION_REVERSING,
    UNCLASSIFIED,
    BasePointError,
    DegenerateJacobianError,
    Region,
    base_fixed_point,
    classify_fixed_point,
    find_fixed_points,
    orientation,
    verify_involution,
)


def test_region_validation():
    with pytest.raises(ValueError):
        Region(1, 0, 0, 1)
    with pytest.raises(ValueError):
        Region(0, 1, 0, 1, grid_n=1)
    r = Region(-5, 5, -5, 5, 41)
    assert r.diameter == pytest.approx(math.hypot(10, 10))
    nodes = list(r.nodes())
    assert len(nodes) == 41 * 41
    assert nodes[0] == (-5.0, -5.0) and nodes[-1] == (5.0, 5.0)


def test_verify_involution_exact_shear():
    check = verify_involution(parse("(x - y^3, -y)"), Region(-5, 5, -5, 5), 1e-9)
    assert check.passed and check.max_residual == 0.0


def test_verify_involution_rejects_translation():
    check = verify_involution(parse("(x + 1, y)"), Region(-5, 5, -5, 5), 1e-9)
    assert not check.passed
    assert check.max_residual == pytest.approx(2.0)  # at the origin, 2/(1+0)


def test_verify_involution_sinh_conjugated():
    entry = get("B")
    check = verify_involution(entry.map, Region(-3, 3, -3, 3), 1e-9)
    assert check.passed


def test_verify_involution_polynomially_conjugated_flip():
    # flip (x, y) -> (x, -y) seen through the coordinate change (x + y^3, y)
    check = verify_involution(parse("(x + 2*y^3, -y)"), Region(-3, 3, -3, 3), 1e-9)
    assert check.passed and check.max_residual <= 1e-9


@pytest.mark.parametrize("name,kind", [
    ("A1", ORIENTATION_REVERSING),
    ("A2", ORIENTATION_PRESERVING),
    ("A3", ORIENTATION_REVERSING),
    ("A4", ORIENTATION_PRESERVING),
    ("identity", ORIENTATION_PRESERVING),
])
def test_orientation_classes(name, kind):
    entry = get(name)
    o = orientation(entry.map, entry.window)
    assert o.kind == kind
    assert o.min_abs_det > 0.0


def test_orientation_rejects_degenerate_jacobian():
    # det changes sign across x = 0, and vanishes there
    with pytest.raises(DegenerateJacobianError):
        orientation(parse("(x^2, y)"), Region(-1, 1, -1, 1, 11))


def test_fixed_points_isolated_minus():
    scan = find_fixed_points(get("A2").map, Region(-4, 4, -4, 4))
    assert not scan.curve
    assert len(scan.points) == 1
    fp = scan.points[0]
    assert fp.location == pytest.approx((0.0, 0.0), abs=1e-9)
    assert fp.classification == FIX_MINUS


def test_fixed_points_curve_on_axis():
    scan = find_fixed_points(get("A1").map, Region(-5, 5, -5, 5))
    assert scan.curve
    assert len(scan.points) > 2
    assert all(abs(fp.location[1]) <= 1e-8 for fp in scan.points)
    assert all(fp.classification == CURVE for fp in scan.points)


def test_fixed_points_minus_identity():
    scan = find_fixed_points(parse("(-x, -y)"))
    assert [fp.classification for fp in scan.points] == [FIX_MINUS]
    assert scan.points[0].location == pytest.approx((0.0, 0.0), abs=1e-12)


def test_fixed_points_polished_to_tolerance():
    for name in ("A1", "A2", "A3", "B"):
        entry = get(name)
        scan = find_fixed_points(entry.map, entry.window)
        for fp in scan.points:
            fx, fy = entry.map.evaluate(fp.location)
            assert math.hypot(fx - fp.location[0], fy - fp.location[1]) <= 1e-9


def test_classify_fixed_point():
    assert classify_fixed_point(parse("(x, y)"), (2.0, 3.0)) == FIX_PLUS
    assert classify_fixed_point(get("A4").map, (0.0, 0.0)) == FIX_MINUS
    # orientation-reversing: the +/-I dichotomy does not apply
    assert classify_fixed_point(get("A1").map, (1.0, 0.0)) == UNCLASSIFIED


def test_base_fixed_point_prefers_origin():
    assert base_fixed_point(get("A1").map) == (0.0, 0.0)


def test_base_fixed_point_finds_recentering_target():
    # un-recentered A2 with n = 0: fixes (0.5, 0) only
    p = base_fixed_point(parse("(-x + 1, -y)"))
    assert p == pytest.approx((0.5, 0.0), abs=1e-9)


def test_base_fixed_point_error_for_fixed_point_free_map():
    with pytest.raises(BasePointError):
        base_fixed_point(parse("(x + 1, y)"))
