"""Degree bounds for invariant hypersurfaces, audited end to end.

On an eligible grading coordinate (one where every variable degree is
nonnegative) a strongly quasi-smooth invariant hypersurface satisfies

    deg(V)_k  <=  twist_k + max over pairs (deg z_i + deg z_j)_k

provided the field is not a combination of the radial fields.  The audit
checks each hypothesis, prints the comparison, and refuses to assert the
bound when a hypothesis fails; the final example shows the inequality
genuinely breaking once the hypotheses are dropped.
"""

from toricfol.audit import AuditOptions, audit_case
from toricfol.families import (
    biproj_pairs_fixture,
    monomial_hypersurface_fixture,
    split_field_fixture,
    torsion_fermat_fixture,
    wps_pairs_fixture,
)


def show(fix, options=AuditOptions()):
    report = audit_case(fix.model, fix.field, fix.hypersurface, options)
    print(f"== {fix.name}")
    print(report.to_text(fix.model.variable_names))
    print()


# Slack 1: the Fermat curve degree sits strictly inside the bound.
show(torsion_fermat_fixture(3))

# Slack 2 in both coordinates on a product of lines.
show(biproj_pairs_fixture(1, [1], [1]))

# A sharp case: equal weights make the pair sum attain the maximum.
show(wps_pairs_fixture((1, 1, 1, 1), (2, 2, 2, 2)))

# The subset variant is sharp in the second coordinate.
fix = split_field_fixture(1, 2, (1, 1))
show(fix, AuditOptions(radial_index=0, subset=fix.subset))

# Dropping the hypotheses: inconsistent twist, wildly singular
# hypersurface, and for large exponents the inequality itself fails.
show(monomial_hypersurface_fixture(5, 5))
