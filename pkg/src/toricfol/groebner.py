"""Buchberger-based ideal computations at desk scale.

Uses the normal selection strategy (smallest lcm degree, ties by pair
index) with first-match reduction, which keeps the reduced basis, and
therefore every downstream certificate, deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import (
    ORDER_KEYS,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

EMPTY_VARIETY = -1
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: str = "grevlex"

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars


def reduce_poly(f: Polynomial, gens, order: str = "grevlex") -> Polynomial:
    """Full remainder of f on division by gens (first matching reducer)."""
    key = ORDER_KEYS[order]
    leads = [g.leading_term(order) for g in gens]
    rem: dict = {}
    work = f
    while work:
        lm, lc = work.leading_term(order)
        for g, (glm, glc) in zip(gens, leads):
            if monomial_divides(glm, lm):
                work = work - g.mul_monomial(monomial_div(lm, glm), lc / glc)
                break
        else:
            rem[lm] = lc
            work = Polynomial(f.nvars, {m: c for m, c in work.terms.items() if key(m) < key(lm)})
    return Polynomial(f.nvars, rem)


def _spoly(f: Polynomial, g: Polynomial, order: str) -> Polynomial:
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = monomial_lcm(fm, gm)
    return f.mul_monomial(monomial_div(lcm, fm), 1 / fc) - g.mul_monomial(
        monomial_div(lcm, gm), 1 / gc
    )


def buchberger(gens, order: str = "grevlex") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens."""
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    if not basis:
        raise ValueError("no nonzero generators")
    nvars = basis[0].nvars
    for g in basis:
        if g.nvars != nvars:
            raise ValueError("variable count mismatch among generators")

    pairs = set(combinations(range(len(basis)), 2))
    while pairs:
        best = None
        for i, j in pairs:
            lcm = monomial_lcm(basis[i].leading_term(order)[0], basis[j].leading_term(order)[0])
            rank = (sum(lcm), i, j)
            if best is None or rank < best[0]:
                best = (rank, (i, j), lcm)
        _, (i, j), lcm = best
        pairs.discard((i, j))
        lm_i = basis[i].leading_term(order)[0]
        lm_j = basis[j].leading_term(order)[0]
        if lcm == monomial_mul(lm_i, lm_j):
            continue  # coprime leading terms: s-polynomial reduces to zero
        rem = reduce_poly(_spoly(basis[i], basis[j], order), basis, order)
        if rem:
            basis.append(rem.monic(order))
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))
    return GroebnerBasis(generators=_interreduce(basis, order), order=order)


def _interreduce(basis, order: str) -> tuple[Polynomial, ...]:
    # Minimalize (drop generators whose leading term is divisible by a
    # smaller one; divisibility implies order, so an ascending sweep that
    # compares against survivors only is enough), then fully tail-reduce.
    key = ORDER_KEYS[order]
    kept: list[Polynomial] = []
    for g in sorted(basis, key=lambda g: key(g.leading_term(order)[0])):
        lm = g.leading_term(order)[0]
        if not any(monomial_divides(h.leading_term(order)[0], lm) for h in kept):
            kept.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            rest = kept[:i] + kept[i + 1 :]
            if not rest:
                continue
            red = reduce_poly(kept[i], rest, order)
            if red.is_zero():
                kept.pop(i)
                changed = True
                break
            red = red.monic(order)
            if red != kept[i]:
                kept[i] = red
                changed = True
                break
    return tuple(sorted(kept, key=lambda g: key(g.leading_term(order)[0]), reverse=True))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Canonical remainder modulo the ideal; zero iff f belongs to it."""
    if f.nvars != gb.nvars:
        raise ValueError("variable count mismatch")
    if f.is_zero():
        return f
    return reduce_poly(f, gb.generators, gb.order)


def ideal_dimension(gb: GroebnerBasis) -> int:
    """Affine Krull dimension of the quotient; EMPTY_VARIETY when 1 is inside.

    Uses the standard combinatorial rule on the leading-term ideal: the
    dimension is the largest set of variables containing the support of
    no leading monomial.
    """
    lms = [g.leading_term(gb.order)[0] for g in gb.generators]
    if any(sum(m) == 0 for m in lms):
        return EMPTY_VARIETY
    nvars = gb.nvars
    supports = [frozenset(j for j, e in enumerate(m) if e) for m in lms]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def regular_subsequence_check(f: Polynomial, indices) -> bool:
    """Whether the selected partials cut a variety of codimension len(indices)."""
    indices = sorted(set(indices))
    partials = [f.partial_derivative(j) for j in indices]
    if any(p.is_zero() for p in partials):
        return False
    dim = ideal_dimension(buchberger(partials))
    if dim == EMPTY_VARIETY:
        return False
    return dim == f.nvars - len(indices)


def _power_cap(gens, cap):
    if cap is not None:
        return cap
    return 2 * (1 + max(g.total_degree() for g in gens))


def _power_in_ideal(gb: GroebnerBasis, exponents, cap: int) -> bool:
    base = Polynomial.monomial(exponents)
    power = Polynomial.constant(len(exponents), 1)
    for _ in range(cap):
        power = power * base
        if normal_form(power, gb).is_zero():
            return True
    return False


def only_origin_check(model, gens, cap: int | None = None):
    """Whether the common zero set of gens is contained in {0}.

    For models with a strictly positive grading functional a
    zero-dimensional cone must be the origin; otherwise fall back to
    bounded per-variable power membership.  Returns True, False, or
    INCONCLUSIVE when the power cap runs out undecided.
    """
    gens = [g for g in gens]
    if any(g.is_zero() for g in gens):
        raise ValueError("zero generator")
    gb = buchberger(gens)
    dim = ideal_dimension(gb)
    if dim == EMPTY_VARIETY:
        return True  # empty zero set, vacuously inside the origin
    if dim > 0:
        return False
    if model.positive_functional is not None:
        return True
    cap = _power_cap(gens, cap)
    for j in range(model.nvars):
        e = tuple(1 if i == j else 0 for i in range(model.nvars))
        if not _power_in_ideal(gb, e, cap):
            return INCONCLUSIVE
    return True


def sing_inside_irrelevant(model, f: Polynomial, cap: int | None = None) -> str:
    """Whether the singular cone of {f = 0} sits inside the removed locus.

    "yes": every irrelevant generator has a bounded power inside the
    Jacobian ideal.  "no": a coordinate indicator point witnesses a
    singular point outside the removed locus.  Otherwise "inconclusive".
    """
    partials = [f.partial_derivative(j) for j in range(f.nvars)]
    nonzero = [p for p in partials if not p.is_zero()]
    if not nonzero:
        raise ValueError("all partial derivatives vanish identically")
    irr = model.irrelevant_ideal().generators

    # Witness search on indicator points of coordinate subspaces.
    for bits in _indicator_points(f.nvars):
        if all(p.evaluate(bits) == 0 for p in partials) and f.evaluate(bits) == 0:
            if any(_monomial_value(g, bits) for g in irr):
                return "no"

    gb = buchberger(nonzero)
    cap = _power_cap(nonzero, cap)
    if all(_power_in_ideal(gb, g, cap) for g in irr):
        return "yes"
    return INCONCLUSIVE


def _indicator_points(nvars: int):
    for mask in range(1, 2**nvars):
        yield tuple((mask >> j) & 1 for j in range(nvars))


def _monomial_value(exponents, bits) -> int:
    return all(bits[j] for j, e in enumerate(exponents) if e)
