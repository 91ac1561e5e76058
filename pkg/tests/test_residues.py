"""Residue quadratic form: matrices, exact inertia, saddle indices."""

import random
from fractions import Fraction

import pytest

from pseudocurve import residues
from pseudocurve.gaussian import GaussianRational as GR
from pseudocurve.residues import InertiaResult, ResidueForm


def form(k, l, *coeffs):
    return ResidueForm(k, l, tuple(GR.of(c) for c in coeffs))


def test_validation():
    with pytest.raises(ValueError):
        ResidueForm(0, 0, (GR.of(1),))
    with pytest.raises(ValueError):
        ResidueForm(2, 2, (GR.of(1),))  # l must stay below k
    with pytest.raises(ValueError):
        ResidueForm(2, 0, (GR.of(0), GR.of(1)))  # a_0 = 0
    with pytest.raises(ValueError):
        ResidueForm(2, 1, (GR.of(1), GR.of(1)))  # deg P too big


def matrix_of(f):
    return residues.residue_form_matrix(f)


def test_matrix_k1_l0_unit():
    # Q = Re(w_0^2) = x_0^2 - y_0^2 on variables (x0, y0, x1, y1)
    m = matrix_of(form(1, 0, 1))
    assert m[0][0] == 1 and m[1][1] == -1
    assert all(
        m[i][j] == 0 for i in range(4) for j in range(4) if (i, j) not in ((0, 0), (1, 1))
    )


def test_matrix_k2_l1_unit():
    # z^{-1} coefficient is w_0^2; four null directions
    m = matrix_of(form(2, 1, 1))
    result = residues.rational_inertia(m)
    assert result == InertiaResult(1, 1, 4)


def test_matrix_k2_l0_unit():
    # Q = Re(2 w_0 w_1) = 2 x0 x1 - 2 y0 y1
    m = matrix_of(form(2, 0, 1))
    assert m[0][2] == m[2][0] == 1
    assert m[1][3] == m[3][1] == -1
    assert residues.rational_inertia(m) == InertiaResult(2, 2, 2)


def test_imaginary_coefficient():
    # Q = Re(i w_0^2) = -2 x0 y0: a hyperbolic plane
    m = matrix_of(ResidueForm(1, 0, (GR.of(0, 1),)))
    assert m[0][1] == m[1][0] == -1
    assert residues.rational_inertia(m) == InertiaResult(1, 1, 2)


@pytest.mark.parametrize(
    "k,l,coeffs,expected",
    [
        (1, 0, (1,), InertiaResult(1, 1, 2)),
        (2, 0, (1,), InertiaResult(2, 2, 2)),
        (3, 1, (2, -1), InertiaResult(2, 2, 4)),
        (3, 1, ("2", "1"), InertiaResult(2, 2, 4)),
        (4, 1, (3, -2, 1), InertiaResult(3, 3, 4)),
    ],
)
def test_inertia_examples(k, l, coeffs, expected):
    result = residues.inertia(form(k, l, *coeffs))
    assert result == expected
    assert result.s_ind == k - l
    assert result.dimension == 2 * (k + 1)


def test_index_relation_sweep_with_float_crosscheck():
    rng = random.Random(20240)
    for k in range(1, 7):
        for l in range(0, k):
            for _ in range(10):
                coeffs = [_random_nonzero(rng)]
                coeffs += [_random_any(rng) for _ in range(k - l - 1)]
                f = ResidueForm(k, l, tuple(coeffs))
                exact = residues.inertia(f)
                assert (exact.ind_plus, exact.ind_minus) == (k - l, k - l)
                assert exact.nullity == 2 * (k + 1) - 2 * (k - l)
                approx = residues.float_inertia_check(residues.residue_form_matrix(f))
                assert approx == exact


def _random_nonzero(rng):
    while True:
        c = _random_any(rng)
        if not c.is_zero():
            return c


def _random_any(rng):
    return GR.of(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
    )


def test_a0_equivalence():
    assert residues.a0_equivalence_check(form(2, 0, 1, 1))
    assert residues.a0_equivalence_check(form(1, 0, 5))
    assert residues.a0_equivalence_check(form(4, 1, 3, -2, 1))


def test_rational_inertia_on_known_matrices():
    assert residues.rational_inertia([[2]]) == InertiaResult(1, 0, 0)
    assert residues.rational_inertia([[0, 1], [1, 0]]) == InertiaResult(1, 1, 0)
    assert residues.rational_inertia(
        [[1, 0, 0], [0, 0, 0], [0, 0, -3]]
    ) == InertiaResult(1, 1, 1)
    # congruence-stable under scaling rows/cols by squares
    assert residues.rational_inertia(
        [[Fraction(4), Fraction(2)], [Fraction(2), Fraction(1)]]
    ) == InertiaResult(1, 0, 1)


def test_saddle_index_at_cusp():
    assert residues.saddle_index_at_cusp(1, 0, 0) == 1
    assert residues.saddle_index_at_cusp(1, 1, 0) == 0
    assert residues.saddle_index_at_cusp(3, 1, 1) == 1
    with pytest.raises(ValueError):
        residues.saddle_index_at_cusp(1, 2, 0)
    with pytest.raises(ValueError):
        residues.saddle_index_at_cusp(1, 0, -1)


def test_saddle_index_monotonicity():
    for k in range(1, 5):
        for l in range(0, k + 1):
            for nu in range(0, 4):
                here = residues.saddle_index_at_cusp(k, l, nu)
                if l < k:
                    assert here >= residues.saddle_index_at_cusp(k, l + 1, nu)
                assert here >= residues.saddle_index_at_cusp(k, l, nu + 1)
                assert residues.saddle_index_at_cusp(k + 1, l, nu) >= here


def test_total_saddle_index():
    assert residues.total_saddle_index([(1, 0, 0)] * 3) == 3
    assert residues.total_saddle_index([]) == 0
    assert residues.total_saddle_index([(1, 0, 0), (2, 1, 0)]) == 2
