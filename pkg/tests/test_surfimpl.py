"""Surface parametrizations, degree reports, small implicitizations."""

import json
from fractions import Fraction

import pytest

from implitrig.poly import MultiPoly
from implitrig.trig import SphericalSupport, TrigPoly
from implitrig.surfaces import (SurfaceError, general_assumptions_check,
                                harmonic_surface, revolution_surface,
                                sendra_degrees, surface_implicitize_small)

F = Fraction


def xyz_poly():
    vs = ("x", "y", "z")
    return tuple(MultiPoly.var(v, vs) for v in vs)


class TestParametrizations:
    def test_revolution_points_on_sphere(self):
        s = revolution_surface(TrigPoly(F(3), {}, {}))
        for t1, t2 in ((F(1, 2), F(1, 3)), (F(-2), F(5, 7))):
            x, y, z = s.point(t1, t2)
            assert x * x + y * y + z * z == 9

    def test_harmonic_sphere_points(self):
        s = harmonic_surface(SphericalSupport({(0, 0): (F(2), F(0))}))
        for t1, t2 in ((F(1, 3), F(2, 5)), (F(3, 4), F(-1, 2))):
            x, y, z = s.point(t1, t2)
            assert x * x + y * y + z * z == 4

    def test_revolution_symmetry_in_y_z(self):
        """Rotating φ by π flips (y, z); the revolution axis is x."""
        s = revolution_surface(TrigPoly(F(1, 2), {2: F(1, 6)}, {}))
        x1, y1, z1 = s.point(F(1, 3), F(1, 4))
        x2, y2, z2 = s.point(F(-3), F(1, 4))   # t1 → −1/t1 is φ → φ+π
        assert x1 == x2 and y1 == -y2 and z1 == -z2


class TestAssumptionsCheck:
    def test_accepts_revolution(self):
        res = general_assumptions_check(
            revolution_surface(TrigPoly(F(0), {2: F(1)}, {})))
        assert res.ok

    def test_accepts_harmonic(self):
        res = general_assumptions_check(
            harmonic_surface(SphericalSupport({(2, 0): (F(1), F(0))})))
        assert res.ok


class TestDegreeReport:
    def test_revolution_cos2(self):
        rep = sendra_degrees(revolution_surface(TrigPoly(F(0), {2: F(1)}, {})))
        assert rep.map_degree == 2
        assert (rep.table_ratio_x, rep.table_ratio_y, rep.table_ratio_z) \
            == (6, 6, 6)
        # ratio · map degree recovers the partial degrees
        assert rep.deg_x == 12 and rep.deg_y == 12 and rep.deg_z == 12

    def test_json_roundtrip(self):
        rep = sendra_degrees(revolution_surface(TrigPoly(F(0), {2: F(1)}, {})))
        payload = json.loads(rep.to_json())
        assert payload["map_degree"] == 2
        assert payload["table_ratio_x"] == "6"


class TestSmallImplicitization:
    def test_unit_sphere(self):
        f = surface_implicitize_small(
            harmonic_surface(SphericalSupport({(0, 0): (F(1), F(0))})))
        x, y, z = xyz_poly()
        assert f == (x * x + y * y + z * z - 1).normalized()

    def test_revolved_constant(self):
        f = surface_implicitize_small(revolution_surface(TrigPoly(F(3), {}, {})))
        x, y, z = xyz_poly()
        assert f == (x * x + y * y + z * z - 9).normalized()

    def test_translated_sphere_identity(self):
        """Degree ≤ 1 support gives (x+a11)² + (y+b11)² + (z−a10)² − a00²."""
        a00, a10, a11, b11 = F(5), F(1, 2), F(1, 3), F(1, 7)
        h = SphericalSupport({(0, 0): (a00, F(0)), (1, 0): (a10, F(0)),
                              (1, 1): (a11, b11)})
        f = surface_implicitize_small(harmonic_surface(h))
        x, y, z = xyz_poly()
        expected = ((x + a11)**2 + (y + b11)**2 + (z - a10)**2
                    - a00**2).normalized()
        assert f == expected
