"""Koszul normal form of an invariant field.

When the hypersurface is strongly quasi-smooth (its singular cone is just
the origin), an invariant field decomposes into hamiltonian-like pair
fields built from the partials, plus a cofactor multiple of a radial
field.  The pair coefficients satisfy a rigid degree law, which is what
drives the degree bounds in demo 05.
"""

from toricfol import homogeneous_degree, koszul_decompose, verify_decomposition
from toricfol.families import split_field_fixture, torsion_fermat_fixture
from toricfol.normalform import pair_degree

# The Fermat example on the torsion surface.
fix = torsion_fermat_fixture(3)
model, f, x = fix.model, fix.hypersurface, fix.field
names = model.variable_names
dec = koszul_decompose(model, f, x)

print(f"model {model.name}, hypersurface f = {f.to_string(names)}")
for key, value in dec.to_strings(names).items():
    print(f"  {key} = {value}")
print("verified exactly:", verify_decomposition(model, f, x, dec))

# Every nonzero pair coefficient has the forced degree
#   twist + deg z_j + deg z_k - deg f.
from toricfol import foliation_degree

alpha = homogeneous_degree(model, f)
twist = foliation_degree(model, x)
for (j, k), p in dec.pairs:
    if not p.is_zero():
        print(
            f"  deg P[{names[j]},{names[k]}] = {homogeneous_degree(model, p)}"
            f"  (law: {pair_degree(model, twist, alpha, j, k)})"
        )
print()

# The subset variant: only part of the field is invariant, the partials
# on the chosen variables form a regular pair, and a radial field is
# supported there.  The decomposition then runs on that index set alone.
fix = split_field_fixture(1, 2, (1, 1))
model, f = fix.model, fix.hypersurface
x1 = fix.field_parts[0]
names = model.variable_names
dec = koszul_decompose(model, f, x1, radial_index=0, index_set=fix.subset)
print(f"model {model.name}, subset {[names[j] for j in fix.subset]}")
for key, value in dec.to_strings(names).items():
    print(f"  {key} = {value}")
print("verified exactly:", verify_decomposition(model, f, x1, dec))
