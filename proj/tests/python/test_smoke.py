"""Smoke tests for the python bindings."""

from fractions import Fraction

import p3bundles as p3b


def test_lattice_and_cohomology():
    s = p3b.SurfaceClass(5)
    assert p3b.pair(p3b.DivisorClass(1, 0), p3b.DivisorClass(1, 0), s) == -3
    assert p3b.degree(p3b.DivisorClass(0, 1), s) == 4
    co = p3b.cohomology(p3b.DivisorClass(0, 2), s)
    assert (co.h0, co.h1, co.h2, co.chi) == (3, 2, 0, 1)
    assert p3b.h0_master(2, 3, p3b.SurfaceClass(4)) == 16
    assert p3b.genus(p3b.DivisorClass(0, 1), s) == Fraction(3)


def test_riemann_roch_and_twist():
    assert p3b.riemann_roch_p3(p3b.ChernData(1, 1, 0, 0)) == Fraction(4)
    tangent = p3b.ChernData(3, 4, 6, 4)
    assert p3b.twist_chern(tangent, -2) == p3b.ChernData(3, -2, 2, 0)


def test_classification():
    verdict = p3b.classify_rank3(p3b.rank3_line(1, 0, 2, 1))
    assert verdict["status"] == "NotStable"
    assert p3b.classify_rank3(p3b.rank3_line(4, 0, 1, 10))["status"] == "Unknown"
    assert p3b.classify_rank2(p3b.rank2_spec(1, 0, 0, 2))["status"] == "Stable"
    chern = p3b.rank3_chern(p3b.rank3_line(1, -1, 2, 2))
    assert (chern.c2, chern.c3) == (3, 5)


def test_moduli_reports():
    assert p3b.rank2_dimY(2, 2) == 5
    assert p3b.rank2_exact_dim(2, 3)["dim_M"] == 13
    report = p3b.rank3II_report_k3(2, 3)
    assert report["dim_Y"] == 52
    assert report["h1_end"] - report["h2_end"] == report["ed"]
    bounds = p3b.rank2_dim_bounds(4, 5)
    assert bounds["dim_M"] == (85, 94)
    fixed = p3b.rank3I_report(1, 1, -2, 1)
    assert fixed["dim_Y"] == 0 and fixed["smooth_at_E"] == "yes"


def test_verify_suite():
    report = p3b.run_verify(["lattice"])
    assert report["checks_failed"] == 0
    assert report["suites_run"] == ["lattice"]
