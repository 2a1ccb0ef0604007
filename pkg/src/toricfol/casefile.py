"""Sectioned plain-text case files: model + hypersurface + field + options.

Exact integers and rationals only; every parse failure carries a line
(and, for expressions, column) position.  A case renders back to text
canonically, so parse -> render -> parse is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .degrees import DegreeClass
from .foliation import VectorField
from .model import ToricModel, align_display_basis, build_from_presentation, build_from_rays
from .parsing import ParseError, parse_polynomial
from .poly import Polynomial


class CaseError(Exception):
    """One or more located case-file problems."""

    def __init__(self, problems):
        self.problems = tuple(problems)
        super().__init__("\n".join(str(p) for p in self.problems))


@dataclass(frozen=True)
class Located:
    message: str
    line: int

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


@dataclass(frozen=True)
class CaseFile:
    model: ToricModel
    hypersurface: Polynomial | None = None
    field: VectorField | None = None
    radial_index: int = 0
    subset: tuple[int, ...] | None = None
    power_cap: int | None = None


_INT = re.compile(r"^[+-]?\d+$")


def _int(text: str, line: int, what: str) -> int:
    if not _INT.match(text.strip()):
        raise CaseError([Located(f"{what}: exact integer required, got {text.strip()!r}", line)])
    return int(text.strip())


def _split_groups(text: str, line: int) -> list[str]:
    """Split space-separated groups, keeping (...) and {...} intact."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
            if depth < 0:
                raise CaseError([Located("unbalanced bracket", line)])
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if depth:
        raise CaseError([Located("unbalanced bracket", line)])
    if cur:
        out.append("".join(cur))
    return out


def _parse_degree(text: str, moduli, line: int) -> DegreeClass:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    items = [x.strip() for x in body.split(",") if x.strip()]
    free, residues = [], []
    for item in items:
        if item.startswith("[") and item.endswith("]"):
            residues.append(_int(item[1:-1], line, "torsion residue"))
        else:
            free.append(_int(item, line, "degree entry"))
    if len(residues) != len(moduli):
        raise CaseError(
            [Located(f"degree {text.strip()!r} has {len(residues)} residues, model declares {len(moduli)}", line)]
        )
    return DegreeClass(tuple(free), tuple(residues), tuple(moduli))


def _parse_tuple(text: str, line: int, what: str) -> tuple[int, ...]:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise CaseError([Located(f"{what}: expected (a,b,...), got {body!r}", line)])
    return tuple(_int(x, line, what) for x in body[1:-1].split(",") if x.strip())


def _parse_cone(text: str, line: int) -> tuple[int, ...]:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise CaseError([Located(f"cone: expected {{i,j,...}}, got {body!r}", line)])
    idx = tuple(_int(x, line, "cone index") for x in body[1:-1].split(",") if x.strip())
    if any(i < 1 for i in idx):
        raise CaseError([Located("cone indices are 1-based", line)])
    return tuple(i - 1 for i in idx)


def _sections(text: str) -> dict[str, list[tuple[int, str, str]]]:
    """section -> [(line, key, value)]; '#' starts a comment."""
    out: dict[str, list[tuple[int, str, str]]] = {}
    current = None
    problems = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.strip().startswith("["):
            name = line.strip()
            if not name.endswith("]"):
                problems.append(Located("unterminated section header", lineno))
                continue
            current = name[1:-1].strip().lower()
            out.setdefault(current, [])
            continue
        if current is None:
            problems.append(Located("content before any [section] header", lineno))
            continue
        if "=" not in line:
            problems.append(Located("expected key = value", lineno))
            continue
        key, value = line.split("=", 1)
        out[current].append((lineno, key.strip(), value.strip()))
    if problems:
        raise CaseError(problems)
    return out


def parse_case(text: str) -> CaseFile:
    sections = _sections(text)
    if "model" not in sections:
        raise CaseError([Located("missing [model] section", 0)])
    entries = {key: (lineno, value) for lineno, key, value in sections["model"]}

    def need(key):
        if key not in entries:
            raise CaseError([Located(f"[model] is missing {key!r}", 0)])
        return entries[key]

    lineno, value = need("dimension")
    n = _int(value, lineno, "dimension")
    lineno, value = need("variables")
    names = tuple(value.split())
    if len(set(names)) != len(names):
        raise CaseError([Located("duplicate variable name", lineno)])
    name = entries.get("name", (0, ""))[1] or None

    moduli: tuple[int, ...] = ()
    if "torsion" in entries:
        lineno, value = entries["torsion"]
        moduli = tuple(_int(x, lineno, "torsion factor") for x in value.replace(",", " ").split())

    degrees = None
    if "degrees" in entries:
        lineno, value = entries["degrees"]
        groups = _split_groups(value, lineno)
        degrees = [_parse_degree(g, moduli, lineno) for g in groups]
        if len(degrees) != len(names):
            raise CaseError([Located(f"{len(degrees)} degrees for {len(names)} variables", lineno)])

    cones = None
    if "cones" in entries:
        lineno, value = entries["cones"]
        cones = [_parse_cone(g, lineno) for g in _split_groups(value, lineno)]

    irrelevant = None
    if "irrelevant" in entries:
        lineno, value = entries["irrelevant"]
        irrelevant = []
        for g in _split_groups(value, lineno):
            p = parse_polynomial(g, names, line=lineno)
            if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
                raise CaseError([Located(f"irrelevant generator {g!r} is not a plain monomial", lineno)])
            irrelevant.append(next(iter(p.terms)))

    try:
        if "rays" in entries:
            lineno, value = entries["rays"]
            rays = [_parse_tuple(g, lineno, "ray") for g in _split_groups(value, lineno)]
            if len(rays) != len(names):
                raise CaseError([Located(f"{len(rays)} rays for {len(names)} variables", lineno)])
            model = build_from_rays(n, rays, max_cones=cones, variable_names=names, name=name)
            if degrees is not None:
                model = align_display_basis(model, degrees, name=name or model.name)
        elif degrees is not None:
            model = build_from_presentation(
                n,
                degrees,
                variable_names=names,
                irrelevant_generators=irrelevant,
                max_cones=cones,
                name=name,
            )
        else:
            raise CaseError([Located("[model] needs either rays or degrees", 0)])
    except (ValueError, TypeError) as exc:
        raise CaseError([Located(f"model construction failed: {exc}", 0)]) from None

    hypersurface = None
    problems: list = []
    if "hypersurface" in sections:
        for lineno, key, value in sections["hypersurface"]:
            if key != "f":
                problems.append(Located(f"unknown hypersurface key {key!r}", lineno))
                continue
            try:
                hypersurface = parse_polynomial(value, names, line=lineno)
            except ParseError as exc:
                problems.append(exc)

    field = None
    if "field" in sections and sections["field"]:
        comps = {}
        for lineno, key, value in sections["field"]:
            if key not in names:
                problems.append(Located(f"field component for undeclared variable {key!r}", lineno))
                continue
            try:
                comps[names.index(key)] = parse_polynomial(value, names, line=lineno)
            except ParseError as exc:
                problems.append(exc)
        if not problems:
            field = VectorField.from_components(len(names), comps)

    radial_index = 0
    subset = None
    power_cap = None
    if "options" in sections:
        for lineno, key, value in sections["options"]:
            if key == "radial_index":
                idx = _int(value, lineno, "radial_index")
                if not 1 <= idx <= model.rank:
                    problems.append(Located(f"radial_index {idx} out of range 1..{model.rank}", lineno))
                else:
                    radial_index = idx - 1
            elif key == "subset":
                items = value.split()
                bad = [v for v in items if v not in names]
                if bad:
                    problems.append(Located(f"subset names not declared: {' '.join(bad)}", lineno))
                else:
                    subset = tuple(sorted(names.index(v) for v in items))
            elif key == "power_cap":
                power_cap = _int(value, lineno, "power_cap")
            else:
                problems.append(Located(f"unknown option {key!r}", lineno))
    if problems:
        raise CaseError(problems)
    return CaseFile(
        model=model,
        hypersurface=hypersurface,
        field=field,
        radial_index=radial_index,
        subset=subset,
        power_cap=power_cap,
    )


def render_case(case: CaseFile) -> str:
    model = case.model
    names = model.variable_names
    lines = ["[model]"]
    lines.append(f"name = {model.name}")
    lines.append(f"dimension = {model.n}")
    lines.append(f"variables = {' '.join(names)}")
    if model.rays is not None:
        lines.append("rays = " + " ".join("(" + ",".join(map(str, r)) + ")" for r in model.rays))
    if model.moduli:
        lines.append("torsion = " + " ".join(map(str, model.moduli)))
    lines.append("degrees = " + " ".join(_render_degree(d) for d in model.degrees))
    if model.max_cones is not None:
        lines.append(
            "cones = " + " ".join("{" + ",".join(str(i + 1) for i in c) + "}" for c in model.max_cones)
        )
    if model.irrelevant_generators is not None:
        gens = [Polynomial.monomial(g).to_string(names) for g in model.irrelevant_generators]
        lines.append("irrelevant = " + " ".join(gens))
    if case.hypersurface is not None:
        lines.append("")
        lines.append("[hypersurface]")
        lines.append(f"f = {case.hypersurface.to_string(names)}")
    if case.field is not None:
        lines.append("")
        lines.append("[field]")
        for j, comp in enumerate(case.field.components):
            if not comp.is_zero():
                lines.append(f"{names[j]} = {comp.to_string(names)}")
    opts = []
    if case.radial_index:
        opts.append(f"radial_index = {case.radial_index + 1}")
    if case.subset is not None:
        opts.append("subset = " + " ".join(names[j] for j in case.subset))
    if case.power_cap is not None:
        opts.append(f"power_cap = {case.power_cap}")
    if opts:
        lines.append("")
        lines.append("[options]")
        lines.extend(opts)
    return "\n".join(lines) + "\n"


def _render_degree(d: DegreeClass) -> str:
    if len(d.free) == 1 and not d.moduli:
        return str(d.free[0])
    parts = [str(x) for x in d.free] + [f"[{c}]" for c in d.residues]
    return "(" + ",".join(parts) + ")"
