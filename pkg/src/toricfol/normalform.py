"""Koszul normal forms for invariant hypersurfaces.

An invariant field decomposes as a combination of the hamiltonian-like
pair fields (df/dz_j d/dz_k - df/dz_k d/dz_j) plus a cofactor multiple
of a radial field.  The pair coefficients are found by one exact linear
solve over the monomial supports their degrees force; a failure of that
solve under valid hypotheses would falsify the normal form, so it is
raised loudly with the residual system attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .degrees import DegreeClass
from .foliation import (
    DegreeInconsistencyError,
    VectorField,
    foliation_degree,
    invariance_cofactor,
)
from .grading import homogeneous_degree, monomials_of_degree
from .model import ToricModel
from .poly import Polynomial, grevlex_key
from .ratlinalg import solve_linear


class DecompositionError(RuntimeError):
    """Raised when the pair-coefficient system is infeasible."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class KoszulDecomposition:
    """X = sum_{j<k} P_{j,k} (df_j d_k - df_k d_j) + (g / theta) R_i on the index set."""

    index_set: tuple[int, ...]
    pairs: tuple[tuple[tuple[int, int], Polynomial], ...]
    cofactor: Polynomial
    radial_index: int
    theta_value: int

    def pair(self, j: int, k: int) -> Polynomial:
        for (a, b), p in self.pairs:
            if (a, b) == (j, k):
                return p
        nv = self.cofactor.nvars
        return Polynomial.zero(nv)

    def nonzero_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(jk for jk, p in self.pairs if not p.is_zero())

    def to_strings(self, names) -> dict[str, str]:
        out = {
            f"P[{names[j]},{names[k]}]": p.to_string(names)
            for (j, k), p in self.pairs
            if not p.is_zero()
        }
        out["g"] = self.cofactor.to_string(names)
        out["theta"] = str(self.theta_value)
        return out


def euler_check(model: ToricModel, f: Polynomial) -> list[bool]:
    """Exact Euler identities: sum_j a_{i,j} z_j df/dz_j == theta_i * f per radial field."""
    alpha = homogeneous_degree(model, f)
    if alpha is None:
        raise ValueError("polynomial is not quasi-homogeneous")
    out = []
    for i in range(model.rank):
        radial = VectorField.radial(model, i)
        out.append(radial.apply_to(f) == f.scale(model.theta(i, alpha)))
    return out


def reconstruct(
    model: ToricModel, f: Polynomial, dec: KoszulDecomposition
) -> VectorField:
    """The vector field the decomposition denotes, on the full slot range."""
    nv = model.nvars
    partials = {j: f.partial_derivative(j) for j in dec.index_set}
    comps = [Polynomial.zero(nv) for _ in range(nv)]
    for (j, k), p in dec.pairs:
        if p.is_zero():
            continue
        comps[k] = comps[k] + p * partials[j]
        comps[j] = comps[j] - p * partials[k]
    if not dec.cofactor.is_zero():
        scale = Fraction(1, dec.theta_value)
        coeffs = model.radial[dec.radial_index].coefficients
        for j in dec.index_set:
            comps[j] = comps[j] + dec.cofactor.scale(scale) * Polynomial.variable(
                nv, j, coeff=coeffs[j]
            )
    return VectorField(tuple(comps))


def pair_degree(
    model: ToricModel, deg_field: DegreeClass, deg_hyp: DegreeClass, j: int, k: int
) -> DegreeClass:
    """Forced degree of the (j, k) pair coefficient."""
    return deg_field + model.variable_degree(j) + model.variable_degree(k) - deg_hyp


def koszul_decompose(
    model: ToricModel,
    f: Polynomial,
    field: VectorField,
    radial_index: int = 0,
    index_set=None,
) -> KoszulDecomposition:
    """Solve for a decomposition of an invariant field on the index set.

    The field must be supported on the index set and leave {f = 0}
    invariant, and the chosen radial field must be supported there too
    with a nonzero Euler factor on deg(f).  The solution returned is the
    particular one the deterministic elimination produces (free unknowns
    pinned to zero), not a canonical representative.
    """
    nv = model.nvars
    indices = tuple(sorted(set(range(nv) if index_set is None else index_set)))
    outside = [j for j in field.support() if j not in indices]
    if outside:
        raise ValueError(f"field has components outside the index set: {outside}")
    coeffs = model.radial[radial_index].coefficients
    if any(coeffs[j] for j in range(nv) if j not in indices):
        raise ValueError(
            f"radial field {radial_index} is not supported on the index set"
        )
    alpha = homogeneous_degree(model, f)
    if alpha is None:
        raise ValueError("hypersurface is not quasi-homogeneous")
    theta = model.theta(radial_index, alpha)
    if theta == 0:
        raise ValueError(
            f"radial field {radial_index} has zero Euler factor on {alpha}; try another index"
        )
    g = invariance_cofactor(model, field, f)
    if g is None:
        raise ValueError("field does not leave the hypersurface invariant")
    deg_field = foliation_degree(model, field)

    partials = {j: f.partial_derivative(j) for j in indices}
    residual = VectorField(
        tuple(
            field.components[j]
            - g.scale(Fraction(coeffs[j], theta)) * Polynomial.variable(nv, j)
            if j in indices
            else Polynomial.zero(nv)
            for j in range(nv)
        )
    )

    pair_list = [(j, k) for a, j in enumerate(indices) for k in indices[a + 1 :]]
    supports = {}
    columns = []  # (pair, monomial) in deterministic order
    for j, k in pair_list:
        basis = monomials_of_degree(model, pair_degree(model, deg_field, alpha, j, k))
        supports[(j, k)] = basis
        columns.extend(((j, k), m) for m in basis)

    # Equations: per slot c in the index set, match every monomial coefficient.
    contributions: dict[tuple[int, tuple], dict[int, Fraction]] = {}

    def _add(slot, mono, col, val):
        row = contributions.setdefault((slot, mono), {})
        row[col] = row.get(col, Fraction(0)) + val

    for col, ((j, k), m) in enumerate(columns):
        for mm, cc in partials[j].mul_monomial(m).terms.items():
            _add(k, mm, col, cc)
        for mm, cc in partials[k].mul_monomial(m).terms.items():
            _add(j, mm, col, -cc)
    row_keys = set(contributions)
    for c in indices:
        row_keys.update((c, m) for m in residual.components[c].terms)
    ordered_rows = sorted(row_keys, key=lambda cm: (cm[0], grevlex_key(cm[1])), reverse=True)

    if not ordered_rows:
        solution = [Fraction(0)] * len(columns)
    elif not columns:
        solution = [] if all(not residual.components[c].terms.get(m) for c, m in ordered_rows) else None
    else:
        matrix = [
            [contributions.get(rk, {}).get(col, Fraction(0)) for col in range(len(columns))]
            for rk in ordered_rows
        ]
        rhs = [residual.components[c].terms.get(m, Fraction(0)) for c, m in ordered_rows]
        solution = solve_linear(matrix, rhs)
    if solution is None:
        raise DecompositionError(
            "pair-coefficient system is infeasible; the normal form fails here",
            residual=residual.to_strings(model.variable_names),
        )

    pairs = []
    for j, k in pair_list:
        terms = {}
        for col, ((jj, kk), m) in enumerate(columns):
            if (jj, kk) == (j, k) and solution[col]:
                terms[m] = solution[col]
        pairs.append(((j, k), Polynomial(nv, terms)))
    return KoszulDecomposition(
        index_set=indices,
        pairs=tuple(pairs),
        cofactor=g,
        radial_index=radial_index,
        theta_value=theta,
    )


def verify_decomposition(
    model: ToricModel, f: Polynomial, field: VectorField, dec: KoszulDecomposition
) -> bool:
    """Exact reconstruction equality on the index set plus the degree law."""
    alpha = homogeneous_degree(model, f)
    if alpha is None:
        return False
    try:
        deg_field = foliation_degree(model, field)
    except DegreeInconsistencyError:
        return False
    except ValueError:
        deg_field = None  # zero field: fine iff the decomposition is zero too
    rebuilt = reconstruct(model, f, dec)
    for j in dec.index_set:
        if rebuilt.components[j] != field.components[j]:
            return False
    for (j, k), p in dec.pairs:
        if p.is_zero():
            continue
        if deg_field is None:
            return False
        want = pair_degree(model, deg_field, alpha, j, k)
        if homogeneous_degree(model, p) != want:
            return False
    return True
