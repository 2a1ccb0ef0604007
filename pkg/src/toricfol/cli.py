"""Command-line surface: case files in, verdict reports out.

Exit codes: 0 computed and verified, 1 unusable input, 2 a hypothesis
failed, an expected value mismatched, or an audited inequality broke.
Reports go to stdout in deterministic order; --format machine switches
to JSON with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .audit import AuditOptions, audit_case
from .casefile import CaseError, CaseFile, parse_case, render_case
from .families import FIXTURE_BUILDERS, check_fixture
from .foliation import invariance_cofactor
from .grading import homogeneous_degree
from .normalform import DecompositionError, koszul_decompose
from .selfcheck import run_all

OK, INPUT_ERROR, FAILED = 0, 1, 2


def _load_case(args) -> CaseFile:
    path = getattr(args, "case", None) or getattr(args, "model", None)
    if not path:
        raise CaseError([f"no case file given; use --case FILE"])
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CaseError([f"cannot read {path}: {exc}"]) from None
    return parse_case(text)


def _emit(doc: dict, text_lines: list[str], fmt: str):
    if fmt == "machine":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_classgroup(args) -> int:
    case = _load_case(args)
    model = case.model
    doc = {
        "model": model.name,
        "class_group": model.class_group.describe(),
        "rank": model.rank,
        "torsion": list(model.moduli),
        "degrees": {name: str(d) for name, d in zip(model.variable_names, model.degrees)},
        "radial": [list(r.coefficients) for r in model.radial],
        "eligible_k": [k + 1 for k in model.nonnegative_coordinates()],
    }
    lines = [f"model: {model.name}", f"class_group: {model.class_group.describe()}"]
    lines += [f"deg {n} = {d}" for n, d in zip(model.variable_names, model.degrees)]
    lines += [f"radial {i + 1}: {' '.join(map(str, r.coefficients))}" for i, r in enumerate(model.radial)]
    lines.append("eligible_k: " + (" ".join(str(k + 1) for k in model.nonnegative_coordinates()) or "-"))
    _emit(doc, lines, args.format)
    return OK


def _cmd_degree(args) -> int:
    case = _load_case(args)
    if case.hypersurface is None:
        print("case file declares no hypersurface")
        return INPUT_ERROR
    deg = homogeneous_degree(case.model, case.hypersurface)
    if deg is None:
        _emit({"deg_v": "mixed"}, ["deg_v: mixed degrees"], args.format)
        return FAILED
    _emit({"deg_v": str(deg)}, [f"deg_v: {deg}"], args.format)
    return OK


def _cmd_invariance(args) -> int:
    case = _load_case(args)
    if case.hypersurface is None or case.field is None:
        print("invariance needs both a hypersurface and a field section")
        return INPUT_ERROR
    field = case.field if case.subset is None else case.field.restrict(case.subset)
    g = invariance_cofactor(case.model, field, case.hypersurface)
    if g is None:
        _emit({"invariant": False}, ["not invariant"], args.format)
        return FAILED
    text = g.to_string(case.model.variable_names)
    _emit({"invariant": True, "cofactor": text}, [f"cofactor: {text}"], args.format)
    return OK


def _apply_flag_overrides(case: CaseFile, args) -> AuditOptions:
    radial = case.radial_index
    if getattr(args, "radial_index", None):
        radial = args.radial_index - 1
    if not 0 <= radial < case.model.rank:
        raise CaseError([f"radial index {radial + 1} out of range 1..{case.model.rank}"])
    subset = case.subset
    if getattr(args, "subset", None):
        names = case.model.variable_names
        items = [s for s in args.subset.replace(",", " ").split() if s]
        bad = [s for s in items if s not in names]
        if bad:
            raise CaseError([f"subset names not declared: {' '.join(bad)}"])
        subset = tuple(sorted(names.index(s) for s in items))
    cap = case.power_cap
    if getattr(args, "power_cap", None):
        cap = args.power_cap
    return AuditOptions(radial_index=radial, subset=subset, power_cap=cap)


def _cmd_decompose(args) -> int:
    case = _load_case(args)
    if case.hypersurface is None or case.field is None:
        print("decompose needs both a hypersurface and a field section")
        return INPUT_ERROR
    opts = _apply_flag_overrides(case, args)
    field = case.field if opts.subset is None else case.field.restrict(opts.subset)
    names = case.model.variable_names
    try:
        dec = koszul_decompose(
            case.model,
            case.hypersurface,
            field,
            radial_index=opts.radial_index,
            index_set=opts.subset,
        )
    except (DecompositionError, ValueError) as exc:
        _emit({"decomposition": f"failed: {exc}"}, [f"decomposition failed: {exc}"], args.format)
        return FAILED
    entries = dec.to_strings(names)
    lines = [f"{k} = {v}" for k, v in entries.items()]
    _emit({"decomposition": entries}, lines, args.format)
    return OK


def _cmd_audit(args) -> int:
    case = _load_case(args)
    if case.hypersurface is None or case.field is None:
        print("audit needs both a hypersurface and a field section")
        return INPUT_ERROR
    opts = _apply_flag_overrides(case, args)
    if args.decompose:
        opts = AuditOptions(
            radial_index=opts.radial_index,
            subset=opts.subset,
            power_cap=opts.power_cap,
            attach_decomposition=True,
        )
    report = audit_case(case.model, case.field, case.hypersurface, opts)
    if args.format == "machine":
        print(report.to_json())
    else:
        print(report.to_text(case.model.variable_names))
    return OK if report.verdict == "bound-holds" else FAILED


def _parse_fraction_list(text: str) -> list[Fraction]:
    return [Fraction(x) for x in text.replace(",", " ").split()]


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _cmd_fixture(args) -> int:
    name = args.name
    if name not in FIXTURE_BUILDERS:
        print(f"unknown fixture {name!r}; known: {' '.join(sorted(FIXTURE_BUILDERS))}")
        return INPUT_ERROR
    try:
        fix = _build_fixture(name, args)
    except (ValueError, TypeError) as exc:
        print(f"cannot build fixture: {exc}")
        return INPUT_ERROR
    results = check_fixture(fix)
    opts = AuditOptions(radial_index=fix.radial_index, subset=fix.subset)
    report = audit_case(fix.model, fix.field, fix.hypersurface, opts)
    doc = {
        "fixture": fix.name,
        "checks": [
            {
                "name": r.name,
                "passed": r.passed,
                "expected": r.expected,
                "actual": r.actual,
                "provenance": r.provenance,
            }
            for r in results
        ],
        "audit": report.to_dict(),
    }
    lines = [f"fixture: {fix.name}"]
    for r in results:
        status = "ok" if r.passed else f"MISMATCH (expected {r.expected}, got {r.actual})"
        lines.append(f"check {r.name} [{r.provenance}]: {status}")
    lines.append("")
    lines.append(report.to_text(fix.model.variable_names))
    _emit(doc, lines, args.format)
    mismatch = any(not r.passed for r in results)
    return FAILED if mismatch else OK


def _build_fixture(name: str, args):
    if name == "wps-pairs":
        if not args.omega or not args.d:
            raise ValueError("wps-pairs needs --omega and --d")
        coeffs = _parse_fraction_list(args.coeffs) if args.coeffs else None
        return FIXTURE_BUILDERS[name](_parse_int_list(args.omega), _parse_int_list(args.d), coeffs)
    if name == "biproj-pairs":
        if args.n is None or not args.a or not args.b:
            raise ValueError("biproj-pairs needs --n, --a and --b")
        return FIXTURE_BUILDERS[name](args.n, _parse_fraction_list(args.a), _parse_fraction_list(args.b))
    if name == "torsion-fermat":
        if args.m is None:
            raise ValueError("torsion-fermat needs --m")
        return FIXTURE_BUILDERS[name](args.m)
    if name == "split-field":
        if args.alpha1 is None or args.alpha2 is None:
            raise ValueError("split-field needs --alpha1 and --alpha2")
        c = _parse_fraction_list(args.c) if args.c else (1, 1)
        return FIXTURE_BUILDERS[name](args.alpha1, args.alpha2, c)
    if name == "monomial-hypersurface":
        if args.alpha is None or args.beta is None:
            raise ValueError("monomial-hypersurface needs --alpha and --beta")
        return FIXTURE_BUILDERS[name](args.alpha, args.beta)
    raise ValueError(name)


def _cmd_selftest(args) -> int:
    outcome = run_all(fast=args.fast)
    doc = {}
    failed = False
    for name, (ok, sample) in sorted(outcome.items()):
        doc[name] = "pass" if ok else f"FAIL: {sample}"
        print(f"suite {name}: {'pass' if ok else 'FAIL'}")
        for note in sample:
            print(f"  {note}")
        failed = failed or not ok
    if args.format == "machine":
        print(json.dumps(doc, indent=2, sort_keys=True))
    return FAILED if failed else OK


def _cmd_export(args) -> int:
    """Render a fixture as a case file (round-trip aid)."""
    if args.name not in FIXTURE_BUILDERS:
        print(f"unknown fixture {args.name!r}")
        return INPUT_ERROR
    fix = _build_fixture(args.name, args)
    case = CaseFile(
        model=fix.model,
        hypersurface=fix.hypersurface,
        field=fix.field,
        radial_index=fix.radial_index,
        subset=fix.subset,
    )
    sys.stdout.write(render_case(case))
    return OK


def _add_common(sub, case=True):
    sub.add_argument("--case", help="case file path")
    sub.add_argument("--model", help="alias for --case (model-only files)")
    sub.add_argument("--format", choices=("text", "machine"), default="text")


def _add_fixture_params(sub):
    sub.add_argument("--m", type=int)
    sub.add_argument("--n", type=int)
    sub.add_argument("--a")
    sub.add_argument("--b")
    sub.add_argument("--c")
    sub.add_argument("--omega")
    sub.add_argument("--d")
    sub.add_argument("--coeffs")
    sub.add_argument("--alpha", type=int)
    sub.add_argument("--beta", type=int)
    sub.add_argument("--alpha1", type=int)
    sub.add_argument("--alpha2", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricfol",
        description="Exact toolkit for foliations on compact toric orbifolds.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("classgroup", help="divisor class group and variable degrees")
    _add_common(sub)
    sub.set_defaults(func=_cmd_classgroup)

    sub = subs.add_parser("degree", help="multidegree of the case hypersurface")
    _add_common(sub)
    sub.set_defaults(func=_cmd_degree)

    sub = subs.add_parser("invariance", help="cofactor of the case field on the hypersurface")
    _add_common(sub)
    sub.set_defaults(func=_cmd_invariance)

    sub = subs.add_parser("decompose", help="pair-field normal form of the case field")
    _add_common(sub)
    sub.add_argument("--radial-index", type=int, dest="radial_index", help="1-based radial field")
    sub.add_argument("--subset", help="comma or space separated variable names")
    sub.add_argument("--power-cap", type=int, dest="power_cap")
    sub.set_defaults(func=_cmd_decompose)

    sub = subs.add_parser("audit", help="hypotheses plus degree-bound comparison")
    _add_common(sub)
    sub.add_argument("--radial-index", type=int, dest="radial_index")
    sub.add_argument("--subset")
    sub.add_argument("--power-cap", type=int, dest="power_cap")
    sub.add_argument("--decompose", action="store_true", help="attach a normal form")
    sub.set_defaults(func=_cmd_audit)

    sub = subs.add_parser("fixture", help="run a named example with expected-value checks")
    sub.add_argument("name")
    sub.add_argument("--format", choices=("text", "machine"), default="text")
    _add_fixture_params(sub)
    sub.set_defaults(func=_cmd_fixture)

    sub = subs.add_parser("export", help="print a named example as a case file")
    sub.add_argument("name")
    _add_fixture_params(sub)
    sub.set_defaults(func=_cmd_export)

    sub = subs.add_parser("selftest", help="randomized property suites")
    sub.add_argument("--fast", action="store_true")
    sub.add_argument("--format", choices=("text", "machine"), default="text")
    sub.set_defaults(func=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CaseError as exc:
        print(f"input error:\n{exc}")
        return INPUT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}")
        return INPUT_ERROR


def entry():
    sys.exit(run())


if __name__ == "__main__":
    entry()
