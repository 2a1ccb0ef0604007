"""Toric orbifold models in homogeneous coordinates.

A model is either built from the rays of a fan (the divisor class group,
variable multidegrees and radial vector fields are then computed by Smith
reduction of the ray pairing matrix) or declared directly by a variable
degree presentation (the quotient-construction route).  Either way the
model is an immutable value: one variable per ray, graded by
Z^r + torsion, with r canonical radial fields given by the free rows of
the degree matrix, so that the Euler factor of a class is simply its
k-th free coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .degrees import DegreeClass, degree_of_monomial
from .halfspaces import feasible_point
from .intlinalg import (
    AbelianGroupPresentation,
    IntMatrix,
    cokernel,
    smith_normal_form,
    solve_integer_system,
)
from .ratlinalg import solve_linear


@dataclass(frozen=True)
class RadialField:
    """Diagonal vector field with component a_j * z_j at the j-th slot."""

    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class BasisChange:
    """Recorded map from the Smith-canonical grading basis to the display basis.

    free            unimodular r x r matrix acting on free coordinates
    torsion_units   multiplier u_k on the k-th torsion residue (a unit mod t_k)
    torsion_shears  per-factor vector s with residue' = u*residue + s . free'
    """

    free: IntMatrix
    torsion_units: tuple[int, ...] = ()
    torsion_shears: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class IrrelevantIdeal:
    """Squarefree monomial generators cutting out the removed locus."""

    generators: tuple[tuple[int, ...], ...]
    cones: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class ToricModel:
    name: str
    n: int
    variable_names: tuple[str, ...]
    class_group: AbelianGroupPresentation
    degrees: tuple[DegreeClass, ...]
    radial: tuple[RadialField, ...]
    rays: tuple[tuple[int, ...], ...] | None = None
    max_cones: tuple[tuple[int, ...], ...] | None = None
    irrelevant_generators: tuple[tuple[int, ...], ...] | None = None
    basis_change: BasisChange | None = None
    positive_functional: tuple[Fraction, ...] | None = None

    @property
    def rank(self) -> int:
        return self.class_group.rank

    @property
    def nvars(self) -> int:
        return len(self.variable_names)

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.class_group.torsion

    def zero_degree(self) -> DegreeClass:
        return DegreeClass.zero(self.rank, self.moduli)

    def variable_degree(self, j: int) -> DegreeClass:
        return self.degrees[j]

    def variable_index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not declared by model {self.name}") from None

    def monomial_degree(self, exponents) -> DegreeClass:
        return degree_of_monomial(self.degrees, exponents)

    # -- radial structure --------------------------------------------------

    def theta(self, i: int, alpha: DegreeClass) -> int:
        """Euler factor of the i-th radial field on classes of degree alpha.

        Computed as sum_j a_{i,j} m_j over an integer representative m of
        alpha; with the canonical radial fields this equals alpha.free[i].
        """
        if not 0 <= i < self.rank:
            raise IndexError(f"radial index {i} out of range")
        rep = self.degree_representative(alpha)
        if rep is None:
            raise ValueError(f"degree class {alpha} is not realized by any monomial")
        return sum(a * m for a, m in zip(self.radial[i].coefficients, rep))

    def degree_representative(self, alpha: DegreeClass) -> tuple[int, ...] | None:
        """Integer exponent vector (possibly negative) with the given class."""
        if len(alpha.free) != self.rank or alpha.moduli != self.moduli:
            raise ValueError("degree class belongs to a different grading group")
        r, m = self.rank, len(self.moduli)
        rows = []
        for i in range(r):
            rows.append([d.free[i] for d in self.degrees] + [0] * m)
        for k in range(m):
            slack = [0] * m
            slack[k] = self.moduli[k]
            rows.append([d.residues[k] for d in self.degrees] + slack)
        sol = solve_integer_system(
            IntMatrix.from_rows(rows), list(alpha.free) + list(alpha.residues)
        )
        return sol[: self.nvars] if sol is not None else None

    def nonnegative_coordinates(self) -> tuple[int, ...]:
        """Free coordinates k where every variable degree is >= 0.

        Every monomial degree is a nonnegative combination of variable
        degrees, so these are exactly the coordinates on which the whole
        coordinate ring has nonnegative degree.  0-based.
        """
        return tuple(
            k for k in range(self.rank) if all(d.free[k] >= 0 for d in self.degrees)
        )

    def irrelevant_ideal(self) -> IrrelevantIdeal:
        if self.irrelevant_generators is not None:
            return IrrelevantIdeal(self.irrelevant_generators, self.max_cones)
        if self.max_cones is None:
            raise ValueError(f"model {self.name} carries no maximal cone data")
        gens = []
        for cone in self.max_cones:
            inside = set(cone)
            gens.append(tuple(0 if j in inside else 1 for j in range(self.nvars)))
        return IrrelevantIdeal(tuple(gens), self.max_cones)

    def __str__(self) -> str:
        return f"{self.name}: {self.class_group.describe()}"


def _default_names(count: int) -> tuple[str, ...]:
    return tuple(f"z{j+1}" for j in range(count))


def build_from_rays(
    n: int,
    rays,
    max_cones=None,
    variable_names=None,
    name: str | None = None,
) -> ToricModel:
    """Model of the quotient presented by fan rays.

    Rays must be primitive, pairwise distinct and span R^n.  Fan
    completeness and simpliciality are trusted, not verified.
    """
    rays = tuple(tuple(int(x) for x in ray) for ray in rays)
    for ray in rays:
        if gcd(*ray) != 1:
            raise ValueError(f"ray {ray} is not primitive")
    if len(set(rays)) != len(rays):
        raise ValueError("duplicate ray")
    return build_from_pairing_rows(
        n, rays, max_cones=max_cones, variable_names=variable_names, name=name
    )


def build_from_pairing_rows(
    n: int,
    rows,
    max_cones=None,
    variable_names=None,
    name: str | None = None,
) -> ToricModel:
    """Model from raw lattice pairing rows, one per variable.

    Same as build_from_rays minus the primitivity and distinctness
    checks: quotient-lattice images of coordinate vectors (the weighted
    projective construction) are legitimate pairing rows yet need not be
    primitive when the weights are not well-formed.
    """
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if len(rows) < n:
        raise ValueError("need at least n rays")
    for row in rows:
        if len(row) != n:
            raise ValueError(f"ray {row} does not have {n} coordinates")
    pairing = IntMatrix.from_rows(rows)
    group = cokernel(pairing)
    if group.rank != len(rows) - n:
        raise ValueError("rays do not span R^n")
    degrees = tuple(
        DegreeClass(*group.reduce(_unit(len(rows), j)), moduli=group.torsion)
        for j in range(len(rows))
    )
    for j, d in enumerate(degrees):
        if d.is_zero():
            raise ValueError(f"variable {j} has degree zero (principal ray divisor)")
    if max_cones is not None:
        max_cones = tuple(tuple(sorted(int(i) for i in cone)) for cone in max_cones)
        for cone in max_cones:
            if cone and not (0 <= cone[0] and cone[-1] < len(rows)):
                raise ValueError(f"cone {cone} references an unknown ray")
    return ToricModel(
        name=name or f"toric(n={n},rays={len(rows)})",
        n=n,
        variable_names=tuple(variable_names) if variable_names else _default_names(len(rows)),
        class_group=group,
        degrees=degrees,
        radial=_radial_fields(degrees),
        rays=rows,
        max_cones=max_cones,
        positive_functional=_positive_functional(degrees),
    )


def build_from_presentation(
    n: int,
    degrees,
    variable_names=None,
    irrelevant_generators=None,
    max_cones=None,
    name: str | None = None,
) -> ToricModel:
    """Model declared by variable multidegrees (torus action weights)."""
    degrees = tuple(degrees)
    if not degrees:
        raise ValueError("no degrees")
    r = len(degrees[0].free)
    moduli = degrees[0].moduli
    if len(degrees) != n + r:
        raise ValueError(f"{len(degrees)} degrees for n={n}, rank={r}; expected {n + r}")
    for d in degrees:
        if len(d.free) != r or d.moduli != moduli:
            raise ValueError("inconsistent degree ranks")
    free = IntMatrix.from_rows([[d.free[i] for d in degrees] for i in range(r)])
    nonzero = sum(1 for f in smith_normal_form(free).invariant_factors() if f)
    if nonzero != r:
        raise ValueError("free-part degree matrix is rank deficient")
    projector_rows = [[d.free[i] for d in degrees] for i in range(r)] + [
        [d.residues[k] for d in degrees] for k in range(len(moduli))
    ]
    group = AbelianGroupPresentation(
        rank=r, torsion=moduli, projector=IntMatrix.from_rows(projector_rows)
    )
    return ToricModel(
        name=name or f"toric(n={n},r={r})",
        n=n,
        variable_names=tuple(variable_names) if variable_names else _default_names(n + r),
        class_group=group,
        degrees=degrees,
        radial=_radial_fields(degrees),
        max_cones=max_cones,
        irrelevant_generators=(
            tuple(tuple(g) for g in irrelevant_generators)
            if irrelevant_generators is not None
            else None
        ),
        positive_functional=_positive_functional(degrees),
    )


def _unit(n: int, j: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(n))


def _radial_fields(degrees) -> tuple[RadialField, ...]:
    r = len(degrees[0].free)
    return tuple(
        RadialField(tuple(d.free[i] for d in degrees)) for i in range(r)
    )


def _positive_functional(degrees) -> tuple[Fraction, ...] | None:
    """Rational c with c . deg(z_j) > 0 for every j, when one exists.

    Existence certifies that every graded piece is finite, so monomial
    enumeration terminates without ad hoc caps.
    """
    r = len(degrees[0].free)
    if r == 0:
        return None
    ineqs = [
        (tuple(Fraction(x) for x in d.free), Fraction(1)) for d in degrees
    ]
    return feasible_point(ineqs, r)


def align_display_basis(model: ToricModel, target_degrees, name: str | None = None) -> ToricModel:
    """Re-express a model so its variable degrees match a stated convention.

    Searches for a grading-group automorphism (unimodular map on the free
    part, a unit and a free-part shear on each torsion factor) carrying
    the computed degrees onto the target ones, and records it.
    """
    target = tuple(target_degrees)
    r, moduli = model.rank, model.moduli
    if len(target) != model.nvars:
        raise ValueError("target degree count mismatch")
    for d in target:
        if len(d.free) != r or d.moduli != moduli:
            raise ValueError("target degrees live in a different group")

    cur_free = [[d.free[i] for d in model.degrees] for i in range(r)]
    w_rows = []
    for i in range(r):
        cols = [[cur_free[k][j] for k in range(r)] for j in range(model.nvars)]
        sol = solve_linear(cols, [Fraction(target[j].free[i]) for j in range(model.nvars)])
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError("no integral change of basis reaches the target degrees")
        w_rows.append([int(x) for x in sol])
    w = IntMatrix.from_rows(w_rows)
    if not w.is_unimodular():
        raise ValueError("change of basis is not unimodular")

    new_free = [w.apply([d.free[i] for i in range(r)]) for d in model.degrees]
    units, shears = [], []
    for k, t in enumerate(moduli):
        cur = [d.residues[k] for d in model.degrees]
        want = [target[j].residues[k] for j in range(model.nvars)]
        found = None
        for u in range(1, t):
            if gcd(u, t) != 1:
                continue
            for s in product(range(t), repeat=r):
                if all(
                    (u * c + sum(si * fi for si, fi in zip(s, nf))) % t == wv
                    for c, nf, wv in zip(cur, new_free, want)
                ):
                    found = (u, s)
                    break
            if found:
                break
        if found is None:
            raise ValueError(f"no automorphism of Z/{t} matches the target residues")
        units.append(found[0])
        shears.append(found[1])

    old = model.class_group.projector.entries
    proj_free = [w.apply([old[i][j] for i in range(r)]) for j in range(model.nvars)]
    proj_rows = [[proj_free[j][i] for j in range(model.nvars)] for i in range(r)]
    for k in range(len(moduli)):
        u, s = units[k], shears[k]
        proj_rows.append(
            [
                u * old[r + k][j] + sum(si * proj_rows[i][j] for i, si in enumerate(s))
                for j in range(model.nvars)
            ]
        )
    group = AbelianGroupPresentation(
        rank=r, torsion=moduli, projector=IntMatrix.from_rows(proj_rows)
    )
    return ToricModel(
        name=name or model.name,
        n=model.n,
        variable_names=model.variable_names,
        class_group=group,
        degrees=target,
        radial=_radial_fields(target),
        rays=model.rays,
        max_cones=model.max_cones,
        irrelevant_generators=model.irrelevant_generators,
        basis_change=BasisChange(free=w, torsion_units=tuple(units), torsion_shears=tuple(shears)),
        positive_functional=_positive_functional(target),
    )
