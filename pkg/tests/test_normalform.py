import random
from fractions import Fraction

import pytest

from toricfol.degrees import DegreeClass
from toricfol.foliation import VectorField, invariance_cofactor
from toricfol.grading import homogeneous_degree
from toricfol.normalform import (
    KoszulDecomposition,
    euler_check,
    koszul_decompose,
    pair_degree,
    reconstruct,
    verify_decomposition,
)
from toricfol.poly import Polynomial
from toricfol.selfcheck import random_quasi_homogeneous


def test_euler_check_monomials(family_models):
    rng = random.Random(40)
    for model in family_models:
        f = random_quasi_homogeneous(rng, model, 4)
        assert all(euler_check(model, f))


def test_euler_check_fermat_surface(surface_z3):
    f = Polynomial(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    assert euler_check(surface_z3, f) == [True]
    assert surface_z3.theta(0, homogeneous_degree(surface_z3, f)) == 3


def test_euler_check_random_product(p1p1):
    rng = random.Random(41)
    for _ in range(5):
        f = random_quasi_homogeneous(rng, p1p1, 4)
        assert euler_check(p1p1, f) == [True, True]


def test_torsion_fermat_published_coefficients_verify():
    from toricfol.families import torsion_fermat_fixture

    fix = torsion_fermat_fixture(3)
    model, f = fix.model, fix.hypersurface
    third = Fraction(-1, 3)
    dec = KoszulDecomposition(
        index_set=(0, 1, 2),
        pairs=(
            ((0, 1), Polynomial(3, {(0, 1, 0): third})),
            ((0, 2), Polynomial.zero(3)),
            ((1, 2), Polynomial(3, {(1, 0, 0): third})),
        ),
        cofactor=Polynomial.zero(3),
        radial_index=0,
        theta_value=3,
    )
    assert verify_decomposition(model, f, fix.field, dec)

    flipped = KoszulDecomposition(
        index_set=(0, 1, 2),
        pairs=(
            ((0, 1), Polynomial(3, {(0, 1, 0): -third})),
            ((0, 2), Polynomial.zero(3)),
            ((1, 2), Polynomial(3, {(1, 0, 0): third})),
        ),
        cofactor=Polynomial.zero(3),
        radial_index=0,
        theta_value=3,
    )
    assert not verify_decomposition(model, f, fix.field, flipped)


def test_zero_decomposition_verifies_zero_field(p2):
    f = Polynomial(3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    dec = KoszulDecomposition(
        index_set=(0, 1, 2),
        pairs=(),
        cofactor=Polynomial.zero(3),
        radial_index=0,
        theta_value=2,
    )
    assert verify_decomposition(p2, f, VectorField.zero(3), dec)


def test_solver_round_trip_torsion_fermat():
    from toricfol.families import torsion_fermat_fixture

    for m in (3, 6):
        fix = torsion_fermat_fixture(m)
        dec = koszul_decompose(fix.model, fix.hypersurface, fix.field)
        assert verify_decomposition(fix.model, fix.hypersurface, fix.field, dec)
        assert dec.cofactor.is_zero()
        got = reconstruct(fix.model, fix.hypersurface, dec)
        assert all(a == b for a, b in zip(got.components, fix.field.components))


def test_solver_on_radial_field(surface_z3):
    f = Polynomial(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    radial = VectorField.radial(surface_z3, 0)
    dec = koszul_decompose(surface_z3, f, radial)
    assert all(p.is_zero() for _, p in dec.pairs)
    assert dec.cofactor == Polynomial.constant(3, 3)  # theta(alpha) * 1
    assert verify_decomposition(surface_z3, f, radial, dec)


def test_solver_subset_split_field():
    from toricfol.families import split_field_fixture

    fix = split_field_fixture(1, 2, (1, 1))
    x1 = fix.field_parts[0]
    dec = koszul_decompose(
        fix.model, fix.hypersurface, x1, radial_index=0, index_set=fix.subset
    )
    assert dec.cofactor.is_zero()
    assert verify_decomposition(fix.model, fix.hypersurface, x1, dec)
    # single pair on a two-index set; the coefficient is forced
    assert dec.pair(0, 1) == Polynomial(4, {(2, 0, 0, 0): -1})


def test_degree_law_on_solver_output():
    from toricfol.families import torsion_fermat_fixture

    fix = torsion_fermat_fixture(3)
    model, f = fix.model, fix.hypersurface
    dec = koszul_decompose(model, f, fix.field)
    alpha = homogeneous_degree(model, f)
    d = DegreeClass((2,), (0,), (3,))
    for (j, k), p in dec.pairs:
        if p.is_zero():
            continue
        assert homogeneous_degree(model, p) == pair_degree(model, d, alpha, j, k)


def test_cofactor_consistency():
    from toricfol.families import split_field_fixture, torsion_fermat_fixture

    fer = torsion_fermat_fixture(3)
    dec = koszul_decompose(fer.model, fer.hypersurface, fer.field)
    assert dec.cofactor == invariance_cofactor(fer.model, fer.field, fer.hypersurface)


def test_solver_full_index_four_variables():
    # full-slot decompositions on products and weighted spaces
    from toricfol.families import biproj_pairs_fixture, wps_pairs_fixture

    for fix, idx in (
        (biproj_pairs_fixture(1, [1], [1]), 0),
        (biproj_pairs_fixture(1, [2], [Fraction(1, 3)]), 1),
        (wps_pairs_fixture((1, 2, 1, 2), (4, 2, 4, 2)), 0),
    ):
        dec = koszul_decompose(fix.model, fix.hypersurface, fix.field, radial_index=idx)
        assert verify_decomposition(fix.model, fix.hypersurface, fix.field, dec)


def test_solver_round_trip_on_constructed_fields(family_models):
    # build X = sum Q_jk (df_j d_k - df_k d_j) + h * R_0 from random pieces;
    # such a field is invariant by construction with cofactor theta * h, and
    # the solver must always find some exact decomposition back
    from toricfol.grading import monomials_of_degree

    rng = random.Random(71)
    for model in family_models:
        nv = model.nvars
        trials = 0
        while trials < 3:
            f = random_quasi_homogeneous(rng, model, 3)
            alpha = homogeneous_degree(model, f)
            if model.theta(0, alpha) == 0:
                continue
            trials += 1
            theta = model.theta(0, alpha)
            partials = [f.partial_derivative(j) for j in range(nv)]
            comps = [Polynomial.zero(nv) for _ in range(nv)]
            used = False
            for j in range(nv):
                for k in range(j + 1, nv):
                    delta = alpha + model.variable_degree(j) + model.variable_degree(k) - alpha
                    basis = monomials_of_degree(model, delta)
                    if not basis or rng.random() < 0.4:
                        continue
                    q = Polynomial(nv, {rng.choice(basis): Fraction(rng.randint(-2, 2))})
                    if q.is_zero():
                        continue
                    used = True
                    comps[k] = comps[k] + q * partials[j]
                    comps[j] = comps[j] - q * partials[k]
            h_basis = monomials_of_degree(model, alpha)
            h = Polynomial(nv, {rng.choice(h_basis): Fraction(rng.randint(1, 3))})
            for j in range(nv):
                comps[j] = comps[j] + h * Polynomial.variable(
                    nv, j, coeff=model.radial[0].coefficients[j]
                )
            x = VectorField(tuple(comps))
            if x.is_zero():
                continue
            dec = koszul_decompose(model, f, x, radial_index=0)
            assert verify_decomposition(model, f, x, dec), model.name
            assert dec.cofactor == h.scale(theta)


def test_decompose_requires_invariance(p2):
    f = Polynomial.variable(3, 0)
    x = VectorField.from_components(3, {0: Polynomial.variable(3, 1)})
    with pytest.raises(ValueError):
        koszul_decompose(p2, f, x)


def test_decompose_rejects_zero_theta(p1p1):
    f = Polynomial(4, {(0, 0, 1, 1): 1})  # degree (0, 2): first Euler factor is 0
    radial2 = VectorField.radial(p1p1, 1)
    with pytest.raises(ValueError):
        koszul_decompose(p1p1, f, radial2, radial_index=0)
    dec = koszul_decompose(p1p1, f, radial2, radial_index=1)
    assert dec.cofactor == Polynomial.constant(4, 2)


def test_decompose_rejects_field_outside_subset(p1p1):
    f = Polynomial(4, {(1, 0, 1, 0): 1, (0, 1, 0, 1): 1})
    x = VectorField.from_components(4, {2: Polynomial.variable(4, 2)})
    with pytest.raises(ValueError):
        koszul_decompose(p1p1, f, x, radial_index=0, index_set=(0, 1))


def test_decompose_rejects_radial_not_on_subset(p1p1):
    f = Polynomial(4, {(1, 0, 1, 0): 1, (0, 1, 0, 1): 1})
    x = VectorField.from_components(4, {0: Polynomial.variable(4, 0)})
    with pytest.raises(ValueError):
        koszul_decompose(p1p1, f, x, radial_index=1, index_set=(0, 1))
