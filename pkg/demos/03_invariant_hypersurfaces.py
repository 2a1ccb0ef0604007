"""Vector fields, invariant hypersurfaces, and cofactors.

A hypersurface {f = 0} is invariant under a field X exactly when X(f)
is a polynomial multiple g*f; the multiplier g is the cofactor.  Radial
fields always act by a constant (the Euler factor); genuinely foliated
examples have richer cofactors or none at all.
"""

from toricfol import (
    VectorField,
    foliation_degree,
    invariance_cofactor,
    lie_g_membership,
    singular_scheme_minors,
)
from toricfol.families import (
    monomial_hypersurface_fixture,
    torsion_fermat_fixture,
    wps_pairs_fixture,
)

# Paired powers on a weighted projective space: the field rotates each
# coordinate pair, the pair-power hypersurface cancels exactly.
fix = wps_pairs_fixture((1, 2, 1, 2), (4, 2, 4, 2))
names = fix.model.variable_names
print(f"model {fix.model.name}")
print("field twist:", foliation_degree(fix.model, fix.field))
g = invariance_cofactor(fix.model, fix.field, fix.hypersurface)
print("cofactor   :", g.to_string(names), "(zero: a first integral candidate)")
print()

# The Fermat curve on the Z/3-torsion surface.
fix = torsion_fermat_fixture(3)
names = fix.model.variable_names
print(f"model {fix.model.name}")
print("field twist:", foliation_degree(fix.model, fix.field))
print("cofactor   :", invariance_cofactor(fix.model, fix.field, fix.hypersurface).to_string(names))
member, _ = lie_g_membership(fix.model, fix.field)
print("radial span member:", member)

# The singular scheme upstairs: maximal minors of radial fields over X.
minors = singular_scheme_minors(fix.model, fix.field)
for m in minors:
    print("  minor:", m.to_string(names))
print()

# A monomial hypersurface with a non-constant cofactor; here the field
# does not even have a single consistent twist.
fix = monomial_hypersurface_fixture(2, 3)
names = fix.model.variable_names
print(f"model {fix.model.name}")
try:
    foliation_degree(fix.model, fix.field)
except ValueError as exc:
    print("twist      :", exc)
g = invariance_cofactor(fix.model, fix.field, fix.hypersurface)
print("cofactor   :", g.to_string(names))

# Invariance can simply fail: then there is no cofactor at all.
from toricfol import Polynomial, multiprojective

model = multiprojective(1, 1)
x = VectorField.from_components(4, {0: Polynomial.variable(4, 1)})
print("non-invariant pair ->", invariance_cofactor(model, x, Polynomial.variable(4, 0)))
