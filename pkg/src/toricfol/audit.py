"""Degree-bound audits for invariant hypersurfaces.

The bound per eligible grading coordinate is the field twist plus the
largest pairwise sum of variable degrees (restricted to the chosen index
subset when one is given).  The audit checks every hypothesis, compares
bound against actual degree, and reports a structured verdict; failed
hypotheses downgrade the verdict but never suppress the numeric
comparison, since observing a violated inequality under broken
hypotheses is itself informative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .degrees import DegreeClass
from .foliation import (
    DegreeInconsistencyError,
    VectorField,
    component_degree_candidates,
    foliation_degree,
    invariance_cofactor,
    lie_g_membership,
)
from .grading import homogeneous_degree
from .groebner import INCONCLUSIVE, only_origin_check, regular_subsequence_check, sing_inside_irrelevant
from .model import ToricModel
from .normalform import KoszulDecomposition, koszul_decompose
from .poly import Polynomial


@dataclass(frozen=True)
class AuditOptions:
    radial_index: int = 0
    subset: tuple[int, ...] | None = None
    power_cap: int | None = None
    attach_decomposition: bool = False


@dataclass(frozen=True)
class BoundRow:
    k: int  # 0-based free coordinate
    bound: int
    actual: int
    slack: int
    sharp: bool


@dataclass(frozen=True)
class DegreeCandidate:
    """Bound rows computed from one component's forced twist (used when
    the field has no single consistent degree)."""

    component: int
    deg_field: DegreeClass
    rows: tuple[BoundRow, ...]


@dataclass(frozen=True)
class PairwiseWitness:
    """The tightest per-pair bound an attached decomposition certifies:
    actual <= twist_k + deg(z_i)_k + deg(z_j)_k for some pair with a
    nonzero coefficient."""

    k: int
    pair: tuple[int, int]
    bound: int
    attained: bool


@dataclass(frozen=True)
class AuditReport:
    model: str
    deg_field: str
    deg_hypersurface: str
    eligible: tuple[int, ...]
    quasi_smoothness: str  # strong | quasi-sing-in-irrelevant | fails | inconclusive
    lie_g: str  # member | not-member | not-evaluated
    cofactor: str
    hypotheses: tuple[tuple[str, str], ...]  # (name, "pass" | "fail: reason")
    rows: tuple[BoundRow, ...]
    candidates: tuple[DegreeCandidate, ...]
    verdict: str  # bound-holds | bound-not-asserted | bound-violated
    inequality_violated: bool
    decomposition: KoszulDecomposition | None = None
    decomposition_note: str = ""
    subset: tuple[int, ...] | None = None
    witnesses: tuple[PairwiseWitness, ...] = ()

    def violations(self) -> tuple[str, ...]:
        return tuple(f"{n}: {v}" for n, v in self.hypotheses if v != "pass")

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        doc = {
            "model": self.model,
            "deg_f": self.deg_field,
            "deg_v": self.deg_hypersurface,
            "eligible_k": [k + 1 for k in self.eligible],
            "quasi_smoothness": self.quasi_smoothness,
            "lie_g": self.lie_g,
            "cofactor": self.cofactor,
            "hypotheses": {name: value for name, value in self.hypotheses},
            "bounds": [
                {
                    "k": row.k + 1,
                    "bound": row.bound,
                    "actual": row.actual,
                    "slack": row.slack,
                    "sharp": row.sharp,
                }
                for row in self.rows
            ],
            "candidates": [
                {
                    "component": cand.component + 1,
                    "deg_f": str(cand.deg_field),
                    "bounds": [
                        {
                            "k": row.k + 1,
                            "bound": row.bound,
                            "actual": row.actual,
                            "slack": row.slack,
                            "sharp": row.sharp,
                        }
                        for row in cand.rows
                    ],
                }
                for cand in self.candidates
            ],
            "verdict": self.verdict,
            "inequality_violated": self.inequality_violated,
        }
        if self.subset is not None:
            doc["subset"] = [j + 1 for j in self.subset]
        if self.decomposition is not None or self.decomposition_note:
            doc["decomposition"] = self.decomposition_note or "attached"
        if self.witnesses:
            doc["pairwise"] = [
                {
                    "k": w.k + 1,
                    "pair": [w.pair[0] + 1, w.pair[1] + 1],
                    "bound": w.bound,
                    "attained": w.attained,
                }
                for w in self.witnesses
            ]
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self, names=None) -> str:
        lines = [f"model: {self.model}"]
        lines.append(f"deg_f: {self.deg_field}")
        lines.append(f"deg_v: {self.deg_hypersurface}")
        lines.append(f"eligible_k: {' '.join(str(k + 1) for k in self.eligible) or '-'}")
        if self.subset is not None:
            lines.append(f"subset: {' '.join(str(j + 1) for j in self.subset)}")
        lines.append(f"quasi_smoothness: {self.quasi_smoothness}")
        lines.append(f"lie_g: {self.lie_g}")
        lines.append(f"cofactor: {self.cofactor}")
        for name, value in self.hypotheses:
            lines.append(f"hypothesis {name}: {value}")
        for row in self.rows:
            lines.append(
                f"k={row.k + 1}: bound={row.bound} actual={row.actual} "
                f"slack={row.slack} sharp={'yes' if row.sharp else 'no'}"
            )
        for cand in self.candidates:
            lines.append(f"candidate component {cand.component + 1}: deg_f={cand.deg_field}")
            for row in cand.rows:
                lines.append(
                    f"  k={row.k + 1}: bound={row.bound} actual={row.actual} "
                    f"slack={row.slack} sharp={'yes' if row.sharp else 'no'}"
                )
        if self.decomposition is not None and names is not None:
            for key, value in self.decomposition.to_strings(names).items():
                lines.append(f"decomposition {key}: {value}")
        elif self.decomposition_note:
            lines.append(f"decomposition: {self.decomposition_note}")
        for w in self.witnesses:
            lines.append(
                f"pairwise k={w.k + 1}: bound={w.bound} via pair "
                f"({w.pair[0] + 1},{w.pair[1] + 1})"
                + (" attained" if w.attained else "")
            )
        lines.append(f"inequality_violated: {'yes' if self.inequality_violated else 'no'}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def poincare_bound(
    model: ToricModel, deg_field: DegreeClass, k: int, subset=None
) -> int:
    """Field twist plus the largest pairwise sum of variable degrees at k."""
    if k not in model.nonnegative_coordinates():
        raise ValueError(
            f"coordinate {k} admits negative degrees; the bound is not asserted there"
        )
    indices = tuple(range(model.nvars)) if subset is None else tuple(sorted(set(subset)))
    if len(indices) < 2:
        raise ValueError("need at least two variables to form a pair")
    best = max(
        model.degrees[i].free[k] + model.degrees[j].free[k]
        for a, i in enumerate(indices)
        for j in indices[a + 1 :]
    )
    return deg_field.free[k] + best


def _rows_for(model, deg_field, deg_v, eligible, subset) -> tuple[BoundRow, ...]:
    rows = []
    for k in eligible:
        bound = poincare_bound(model, deg_field, k, subset=subset)
        actual = deg_v.free[k]
        rows.append(BoundRow(k=k, bound=bound, actual=actual, slack=bound - actual, sharp=bound == actual))
    return tuple(rows)


def audit_case(
    model: ToricModel,
    field: VectorField,
    f: Polynomial,
    options: AuditOptions = AuditOptions(),
) -> AuditReport:
    """Full hypothesis check and bound comparison for one case.

    Hypothesis failures become report entries, not exceptions; only
    malformed inputs raise.
    """
    hypotheses: list[tuple[str, str]] = []
    names = model.variable_names

    deg_v = homogeneous_degree(model, f)
    if deg_v is None:
        hypotheses.append(("quasi_homogeneous_hypersurface", "fail: mixed degrees"))
    else:
        hypotheses.append(("quasi_homogeneous_hypersurface", "pass"))

    subset = tuple(sorted(set(options.subset))) if options.subset is not None else None
    if subset is not None and len(subset) < 2:
        raise ValueError("an index subset needs at least two variables")
    audited_field = field if subset is None else field.restrict(subset)
    if subset is not None and audited_field.is_zero():
        raise ValueError("field restricted to the index subset is zero")

    deg_field: DegreeClass | None = None
    candidates: list[tuple[int, DegreeClass]] = []
    try:
        deg_field = foliation_degree(model, field)
        hypotheses.append(("consistent_field_degree", "pass"))
    except DegreeInconsistencyError as exc:
        hypotheses.append(("consistent_field_degree", f"fail: {exc}"))
        candidates = component_degree_candidates(model, field)
    except ValueError as exc:
        raise ValueError(f"vector field unusable: {exc}") from None

    cofactor = None
    if deg_v is not None:
        cofactor = invariance_cofactor(model, audited_field, f)
    if cofactor is None:
        hypotheses.append(("invariant_hypersurface", "fail: no polynomial cofactor"))
        cofactor_str = "none"
    else:
        hypotheses.append(("invariant_hypersurface", "pass"))
        cofactor_str = cofactor.to_string(names)

    lie_verdict = "not-evaluated"
    if deg_field is not None or subset is not None:
        try:
            member, _ = lie_g_membership(model, audited_field)
            lie_verdict = "member" if member else "not-member"
            hypotheses.append(
                ("field_outside_radial_span", "pass" if not member else "fail: field is radial")
            )
        except (DegreeInconsistencyError, ValueError):
            hypotheses.append(
                ("field_outside_radial_span", "fail: field degree inconsistent")
            )
    else:
        hypotheses.append(("field_outside_radial_span", "fail: field degree inconsistent"))

    quasi = "fails"
    if deg_v is not None:
        partials = [f.partial_derivative(j) for j in range(model.nvars)]
        nonzero = [p for p in partials if not p.is_zero()]
        if subset is None:
            strong = only_origin_check(model, nonzero, cap=options.power_cap) if nonzero else False
            if strong is True:
                quasi = "strong"
                hypotheses.append(("quasi_smoothness", "pass"))
            elif strong == INCONCLUSIVE:
                quasi = "inconclusive"
                hypotheses.append(("quasi_smoothness", "fail: power test inconclusive"))
            else:
                quasi = "fails"
                hypotheses.append(
                    ("quasi_smoothness", "fail: singular cone escapes the origin")
                )
        else:
            problems = []
            if not regular_subsequence_check(f, subset):
                problems.append("selected partials are not a regular subsequence")
            radial = model.radial[options.radial_index].coefficients
            if any(radial[j] for j in range(model.nvars) if j not in subset):
                problems.append("radial field not supported on the subset")
            sing = sing_inside_irrelevant(model, f, cap=options.power_cap)
            if sing == "no":
                problems.append("singular cone escapes the removed locus")
            elif sing == INCONCLUSIVE:
                problems.append("membership test inconclusive")
            if problems:
                quasi = "inconclusive" if "inconclusive" in " ".join(problems) else "fails"
                hypotheses.append(("quasi_smoothness", "fail: " + "; ".join(problems)))
            else:
                quasi = "quasi-sing-in-irrelevant"
                hypotheses.append(("quasi_smoothness", "pass"))
    else:
        hypotheses.append(("quasi_smoothness", "fail: hypersurface not quasi-homogeneous"))

    eligible = model.nonnegative_coordinates()
    if eligible:
        hypotheses.append(("eligible_coordinates", "pass"))
    else:
        hypotheses.append(("eligible_coordinates", "fail: no all-nonnegative coordinate"))

    rows: tuple[BoundRow, ...] = ()
    cand_blocks: list[DegreeCandidate] = []
    if deg_v is not None and eligible:
        if deg_field is not None:
            rows = _rows_for(model, deg_field, deg_v, eligible, subset)
        for comp, cand in candidates:
            cand_blocks.append(
                DegreeCandidate(
                    component=comp,
                    deg_field=cand,
                    rows=_rows_for(model, cand, deg_v, eligible, subset),
                )
            )

    violated = any(r.slack < 0 for r in rows) or any(
        r.slack < 0 for cand in cand_blocks for r in cand.rows
    )
    all_pass = all(v == "pass" for _, v in hypotheses)
    if all_pass:
        verdict = "bound-violated" if violated else "bound-holds"
    else:
        verdict = "bound-not-asserted"

    decomposition = None
    note = ""
    witnesses: list[PairwiseWitness] = []
    if options.attach_decomposition:
        if all_pass and deg_v is not None:
            try:
                decomposition = koszul_decompose(
                    model,
                    f,
                    audited_field,
                    radial_index=options.radial_index,
                    index_set=subset,
                )
            except Exception as exc:  # noqa: BLE001 - recorded, not raised
                note = f"decomposition failed: {exc}"
        else:
            note = "decomposition skipped: hypotheses do not hold"
    if decomposition is not None and deg_field is not None and deg_v is not None:
        nonzero = decomposition.nonzero_pairs()
        for k in eligible:
            if not nonzero:
                break
            options_k = [
                (deg_field.free[k] + model.degrees[i].free[k] + model.degrees[j].free[k], (i, j))
                for i, j in nonzero
            ]
            value, pair = min(options_k)
            witnesses.append(
                PairwiseWitness(k=k, pair=pair, bound=value, attained=value == deg_v.free[k])
            )

    return AuditReport(
        model=model.name,
        deg_field=str(deg_field) if deg_field is not None else "inconsistent",
        deg_hypersurface=str(deg_v) if deg_v is not None else "mixed",
        eligible=eligible,
        quasi_smoothness=quasi,
        lie_g=lie_verdict,
        cofactor=cofactor_str,
        hypotheses=tuple(hypotheses),
        rows=rows,
        candidates=tuple(cand_blocks),
        verdict=verdict,
        inequality_violated=violated,
        decomposition=decomposition,
        decomposition_note=note,
        subset=subset,
        witnesses=tuple(witnesses),
    )
