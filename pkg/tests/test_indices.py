"""Index, genus and feasibility calculators."""

import random

import pytest

from pseudocurve import indices
from pseudocurve.errors import GenusFormulaInconsistent, LineBundleOnly
from pseudocurve.indices import BundleData, CurveData


# ---------------------------------------------------------------------------
# genus formula
# ---------------------------------------------------------------------------

def test_genus_formula_smooth_plane_curves():
    for d in range(1, 11):
        data = CurveData(n=2, mu=3 * d, self_int=d * d, genera=(0,), delta=0)
        assert indices.genus_formula_solve(data, "genus") == (d - 1) * (d - 2) // 2
        assert indices.genus_formula_check(indices.cp2_smooth_curve(d))


def test_genus_formula_solve_delta():
    # degree 6 curve of genus 8 carries two nodes
    data = CurveData(n=2, mu=18, self_int=36, genera=(8,), delta=0)
    assert indices.genus_formula_solve(data, "delta") == 2


def test_genus_formula_solve_other_unknowns():
    data = CurveData(n=2, mu=18, self_int=36, genera=(10,), delta=0)
    assert indices.genus_formula_solve(data, "mu") == 18
    assert indices.genus_formula_solve(data, "self_int") == 36
    with pytest.raises(ValueError):
        indices.genus_formula_solve(data, "marked")


def test_genus_formula_inconsistent():
    data = CurveData(n=2, mu=1, self_int=2, genera=(0,), delta=0)
    with pytest.raises(GenusFormulaInconsistent):
        indices.genus_formula_solve(data, "genus")


def test_solve_then_check_roundtrip():
    rng = random.Random(11)
    for _ in range(300):
        d = rng.randint(1, 4)
        genera = tuple(rng.randint(0, 8) for _ in range(d))
        mu = rng.randint(-20, 20)
        delta = rng.randint(0, 10)
        base = CurveData(n=2, mu=mu, self_int=0, genera=genera, delta=delta)
        q = indices.genus_formula_solve(base, "self_int")
        fixed = CurveData(n=2, mu=mu, self_int=q, genera=genera, delta=delta)
        assert indices.genus_formula_check(fixed)


# ---------------------------------------------------------------------------
# index formulas
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "mu,n,g,expected", [(3, 2, 0, 10), (0, 1, 1, 0), (18, 2, 10, 0)]
)
def test_gromov_operator_index(mu, n, g, expected):
    assert indices.gromov_operator_index(mu, n, g) == expected


@pytest.mark.parametrize(
    "c1,rank,g,expected", [(0, 1, 1, 0), (2, 1, 0, 6), (-1, 2, 2, -6)]
)
def test_d_cohomology_index(c1, rank, g, expected):
    assert indices.d_cohomology_index(BundleData(c1, rank, g)) == expected


def test_vanishing_predicate():
    flags = indices.vanishing_predicate(BundleData(-1, 1, 0))
    assert flags.h0_zero and flags.h1_zero  # -1 < 0 and -1 > -2
    flags = indices.vanishing_predicate(BundleData(0, 1, 1))
    assert not flags.h0_zero and not flags.h1_zero  # boundary case: silent
    flags = indices.vanishing_predicate(BundleData(3, 1, 1))
    assert not flags.h0_zero and flags.h1_zero
    with pytest.raises(LineBundleOnly):
        indices.vanishing_predicate(BundleData(1, 2, 0))


@pytest.mark.parametrize(
    "mu,n,g,expected", [(3, 2, 0, 4), (0, 3, 1, 0), (18, 2, 10, 54)]
)
def test_moduli_projection_index(mu, n, g, expected):
    assert indices.moduli_projection_index(mu, n, g) == expected


def test_marked_moduli_index():
    assert indices.marked_moduli_index(18, 2, 10, 17) == 20
    for d in range(1, 11):
        assert indices.marked_moduli_index(3 * d, 2, 0, 3 * d - 1) == 0


def test_marked_index_reduces_to_projection_index():
    rng = random.Random(0)
    for _ in range(2000):
        mu, n, g = rng.randint(-40, 40), rng.randint(2, 6), rng.randint(0, 30)
        assert indices.marked_moduli_index(
            mu, n, g, 0
        ) == indices.moduli_projection_index(mu, n, g)


def test_operator_minus_projection_is_six_minus_six_g():
    for g in range(0, 21):
        for n in (2, 3, 5):
            diff = indices.gromov_operator_index(
                7, n, g
            ) - indices.moduli_projection_index(7, n, g)
            assert diff == 6 * (1 - g)


@pytest.mark.parametrize(
    "mu,n,g,k,h1,expected",
    [(3, 2, 0, 0, 0, 4), (0, 3, 1, 0, 1, 1), (18, 2, 10, 18, 1, 19)],
)
def test_h0_from_h1(mu, n, g, k, h1, expected):
    assert indices.h0_from_h1(mu, n, g, k, h1) == expected


def test_h0_h1_parity():
    rng = random.Random(5)
    for _ in range(500):
        h1 = rng.randint(0, 6)
        h0 = indices.h0_from_h1(
            rng.randint(-20, 20), rng.randint(2, 5), rng.randint(0, 12),
            rng.randint(0, 15), h1,
        )
        assert (h0 - h1) % 2 == 0


def test_empty_stratum_signal():
    assert indices.stratum_is_empty(0, 2, 0, 10, 0)
    assert not indices.stratum_is_empty(3, 2, 0, 0, 0)


def test_h1_stratum_codim():
    assert indices.h1_stratum_codim(4, 0) == 0
    assert indices.h1_stratum_codim(19, 1) == 19
    assert indices.h1_stratum_codim(3, 2) == 6


def test_cusp_count_bounds():
    b = indices.cusp_count_bounds(3, 0, 0)
    assert (b.lower, b.upper) == (3, 2) and b.contradictory
    b = indices.cusp_count_bounds(18, 10, 17)
    assert (b.lower, b.upper) == (1, 10) and not b.contradictory
    b = indices.cusp_count_bounds(0, 1, 0)
    assert (b.lower, b.upper) == (0, 0)
    # the width is always g - 1
    for mu in (-3, 0, 9):
        for g in range(6):
            for m in range(4):
                b = indices.cusp_count_bounds(mu, g, m)
                assert b.upper - b.lower == g - 1


@pytest.mark.parametrize("g,expected", [(0, 0), (1, 1), (2, 3), (5, 12)])
def test_teichmueller_dim(g, expected):
    assert indices.teichmueller_dim(g) == expected


# ---------------------------------------------------------------------------
# feasibility counts
# ---------------------------------------------------------------------------

def test_degree_six_anchor():
    report = indices.cp2_multiple_component_obstruction(6)
    assert report.worst_count == 16
    assert report.required == 17
    assert report.obstructed
    assert report.worst_splitting == ((4, 1), (1, 2))


@pytest.mark.parametrize("d,obstructed", [(1, True), (2, True), (3, True),
                                          (4, True), (5, True), (6, True),
                                          (7, False), (8, False)])
def test_obstruction_flip(d, obstructed):
    assert indices.cp2_multiple_component_obstruction(d).obstructed == obstructed


def test_degree_three_splitting():
    report = indices.cp2_multiple_component_obstruction(3)
    assert report.worst_count == 4  # line + double line
    assert report.required == 8


def test_degree_seven_not_obstructed():
    report = indices.cp2_multiple_component_obstruction(7)
    assert report.worst_count == 22  # quintic + double line
    assert report.required == 20


def test_all_splittings_mode_is_consistent():
    for d in range(1, 9):
        simple = indices.cp2_multiple_component_obstruction(d)
        strict = indices.cp2_multiple_component_obstruction(d, all_splittings=True)
        # the two-part splittings are a subset of all splittings
        assert strict.worst_count >= simple.worst_count
        # and for these degrees the two-part case is already extremal
        assert strict.worst_count == simple.worst_count
        assert strict.obstructed == simple.obstructed
