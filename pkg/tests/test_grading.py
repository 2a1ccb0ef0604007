import random
from itertools import product

import pytest

from toricfol.degrees import DegreeClass
from toricfol.grading import count_lattice_points, homogeneous_degree, monomials_of_degree
from toricfol.model import build_from_presentation, build_from_rays
from toricfol.poly import Polynomial
from toricfol.selfcheck import random_quasi_homogeneous


def test_homogeneous_degree_product_quadric(p1p1):
    f = Polynomial(4, {(1, 0, 1, 0): 1, (0, 1, 0, 1): 1})
    assert homogeneous_degree(p1p1, f) == DegreeClass((1, 1))


def test_torsion_degrees_add_mod_three(surface_z3):
    z2 = Polynomial.variable(3, 1)
    z3 = Polynomial.variable(3, 2)
    # (1,[2]) + (1,[1]) = (2,[0])
    assert homogeneous_degree(surface_z3, z2 * z3) == DegreeClass((2,), (0,), (3,))


def test_homogeneous_degree_torsion_fermat(surface_z3):
    m = 6
    f = Polynomial(3, {(m, 0, 0): 1, (0, m, 0): 1, (0, 0, m): 1})
    assert homogeneous_degree(surface_z3, f) == DegreeClass((m,), (0,), (3,))


def test_homogeneous_degree_mixed_and_zero(p2):
    mixed = Polynomial(3, {(1, 0, 0): 1, (2, 0, 0): 1})
    assert homogeneous_degree(p2, mixed) is None
    with pytest.raises(ValueError):
        homogeneous_degree(p2, Polynomial.zero(3))


def test_degree_additivity_random(family_models):
    rng = random.Random(2)
    for model in family_models:
        for _ in range(10):
            f = random_quasi_homogeneous(rng, model, 4)
            g = random_quasi_homogeneous(rng, model, 4)
            assert homogeneous_degree(model, f * g) == homogeneous_degree(
                model, f
            ) + homogeneous_degree(model, g)


def test_derivative_degree_law(family_models):
    # a nonzero partial of a degree-alpha element has degree alpha - deg(z_j)
    rng = random.Random(3)
    for model in family_models:
        for _ in range(6):
            f = random_quasi_homogeneous(rng, model, 5)
            alpha = homogeneous_degree(model, f)
            for j in range(model.nvars):
                df = f.partial_derivative(j)
                if not df.is_zero():
                    assert homogeneous_degree(model, df) == alpha - model.variable_degree(j)


def test_nonnegative_coordinate_law(family_models):
    # on an eligible coordinate every monomial degree is nonnegative
    rng = random.Random(4)
    for model in family_models:
        for k in model.nonnegative_coordinates():
            for _ in range(10):
                f = random_quasi_homogeneous(rng, model, 5)
                assert homogeneous_degree(model, f).free[k] >= 0


def test_monomial_counts_projective(p2):
    assert len(monomials_of_degree(p2, DegreeClass((2,)))) == 6
    assert len(monomials_of_degree(p2, DegreeClass((0,)))) == 1
    assert monomials_of_degree(p2, DegreeClass((-1,))) == ()


def test_monomial_counts_product(p1p1):
    assert len(monomials_of_degree(p1p1, DegreeClass((1, 1)))) == 4
    assert len(monomials_of_degree(p1p1, DegreeClass((3, 2)))) == 12


def test_monomials_weighted_line():
    from toricfol import weighted_projective

    model = weighted_projective(1, 2)
    got = set(monomials_of_degree(model, DegreeClass((4,))))
    # brute-force oracle over the exponent box
    oracle = {
        (a, b) for a in range(5) for b in range(5) if a + 2 * b == 4
    }
    assert got == oracle == {(4, 0), (2, 1), (0, 2)}


def test_monomials_respect_torsion(surface_z3):
    for free in range(4):
        for res in range(3):
            alpha = DegreeClass((free,), (res,), (3,))
            for m in monomials_of_degree(surface_z3, alpha):
                assert surface_z3.monomial_degree(m) == alpha


def test_enumeration_needs_certificate_or_cap():
    model = build_from_presentation(1, [DegreeClass((1,)), DegreeClass((-1,))])
    assert model.positive_functional is None
    with pytest.raises(ValueError):
        monomials_of_degree(model, DegreeClass((0,)))
    capped = monomials_of_degree(model, DegreeClass((0,)), cap=3)
    assert (1, 1) in capped and (3, 3) in capped


def test_scroll_enumeration_terminates(scroll11):
    got = monomials_of_degree(scroll11, DegreeClass((0, 1)))
    # z2_i sections of the twist-1 bundle: z1_j * z2_i combinations
    assert len(got) == 4
    for m in got:
        assert scroll11.monomial_degree(m) == DegreeClass((0, 1))


def test_count_lattice_points_projective(p2):
    assert count_lattice_points(p2, (2, 0, 0)) == 6
    assert count_lattice_points(p2, (0, 0, 0)) == 1


def test_count_matches_enumeration_cross_oracle(p2, p1p1, surface_z3):
    for model, max_c in ((p2, 3), (p1p1, 2), (surface_z3, 3)):
        for coeffs in product(range(max_c + 1), repeat=model.nvars):
            alpha = model.monomial_degree(coeffs)
            assert count_lattice_points(model, coeffs) == len(
                monomials_of_degree(model, alpha)
            )


def test_count_rejects_bad_input(p2):
    with pytest.raises(ValueError):
        count_lattice_points(p2, (-1, 0, 0))
    incomplete = build_from_rays(2, [(1, 0), (0, 1), (1, 2)])
    with pytest.raises(ValueError):
        count_lattice_points(incomplete, (1, 1, 1))
    from toricfol import rational_scroll

    with pytest.raises(ValueError):  # presentation model carries no rays
        count_lattice_points(rational_scroll(1), (1, 1, 1))
