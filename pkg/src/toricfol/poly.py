"""Sparse multivariate polynomials over exact rationals.

A monomial is an exponent tuple; a polynomial maps exponent tuples to
nonzero Fraction coefficients.  The canonical term order (for printing,
leading terms and division) is graded reverse lexicographic on the raw
exponents, independent of any toric grading.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Exponents = tuple[int, ...]


def grevlex_key(m: Exponents):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Exponents):
    return m


ORDER_KEYS = {"grevlex": grevlex_key, "lex": lex_key}


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Fraction] | None = None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"exponent tuple {m} does not have {nvars} entries")
                c = Fraction(c)
                if c:
                    clean[tuple(int(e) for e in m)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars: int, j: int, power: int = 1, coeff=1) -> "Polynomial":
        if not 0 <= j < nvars:
            raise IndexError(f"variable index {j} out of range")
        m = tuple(power if i == j else 0 for i in range(nvars))
        return cls(nvars, {m: Fraction(coeff)})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff=1) -> "Polynomial":
        m = tuple(int(e) for e in exponents)
        return cls(len(m), {m: Fraction(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self, order: str = "grevlex") -> list[tuple[Exponents, Fraction]]:
        key = ORDER_KEYS[order]
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str = "grevlex") -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = ORDER_KEYS[order]
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def support_variables(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            out.update(j for j, e in enumerate(m) if e)
        return out

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms: dict[Exponents, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, exponents: Exponents, coeff=1) -> "Polynomial":
        c = Fraction(coeff)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(
            self.nvars, {monomial_mul(m, exponents): c * v for m, v in self.terms.items()}
        )

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self, order: str = "grevlex") -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(Fraction(1) / c)

    def partial_derivative(self, j: int) -> "Polynomial":
        if not 0 <= j < self.nvars:
            raise IndexError(f"variable index {j} out of range")
        terms: dict[Exponents, Fraction] = {}
        for m, c in self.terms.items():
            if m[j]:
                dm = tuple(e - 1 if i == j else e for i, e in enumerate(m))
                terms[dm] = terms.get(dm, Fraction(0)) + c * m[j]
        return Polynomial(self.nvars, terms)

    def evaluate(self, point):
        """Evaluate at a point; exact for int/Fraction inputs, numeric otherwise."""
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        exact = all(isinstance(v, (int, Fraction)) for v in point)
        total = Fraction(0) if exact else 0j
        for m, c in self.terms.items():
            factor = c if exact else complex(c)
            for v, e in zip(point, m):
                if e:
                    factor = factor * v**e
            total += factor
        return total

    # -- division ----------------------------------------------------------

    def divide_exact(self, den: "Polynomial", order: str = "grevlex") -> "Polynomial | None":
        """Quotient q with self == q * den, or None when den does not divide.

        Leading-term division is complete here: when rem is a multiple of
        den, the leading term of rem is divisible by the leading term of
        den under any monomial order, so a single failed step certifies
        non-divisibility.
        """
        self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = den.leading_term(order)
        q: dict[Exponents, Fraction] = {}
        rem = self
        while rem:
            rm, rc = rem.leading_term(order)
            if not monomial_divides(lm, rm):
                return None
            m = monomial_div(rm, lm)
            c = rc / lc
            q[m] = c
            rem = rem - den.mul_monomial(m, c)
        return Polynomial(self.nvars, q)

    # -- printing ----------------------------------------------------------

    def to_string(self, names: list[str] | tuple[str, ...]) -> str:
        if len(names) != self.nvars:
            raise ValueError("name list length mismatch")
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            factors = [
                names[j] if e == 1 else f"{names[j]}^{e}" for j, e in enumerate(m) if e
            ]
            mag = abs(c)
            if not factors:
                body = _coeff_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_coeff_str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        generic = [f"x{i}" for i in range(self.nvars)]
        return f"Polynomial({self.to_string(generic)})"


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
