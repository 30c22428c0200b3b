"""Sparse homogeneous polynomials in x_0..x_n over an exact field.

``terms`` maps exponent tuples (length n+1, entries summing to the stated
degree) to nonzero scalars.  Zero coefficients are never stored; the zero
polynomial keeps an explicit degree label.  Serialization orders exponent
vectors lexicographically.
"""

from __future__ import annotations

from ._text import parse_terms, term_text
from .errors import AmbientMismatch, DegreeMismatch, ParseError
from .scalars import Field


class MPoly:
    __slots__ = ("field", "n", "degree", "terms")

    def __init__(self, field: Field, n: int, degree: int, terms=None):
        if n < 0 or degree < 0:
            raise ValueError("ambient dimension and degree must be nonnegative")
        self.field = field
        self.n = n
        self.degree = degree
        clean = {}
        for exps, c in (terms or {}).items():
            c = field.of(c)
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != n + 1 or any(e < 0 for e in exps) or sum(exps) != degree:
                raise ValueError(f"exponent vector {exps} is not degree-{degree} in {n + 1} variables")
            clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: Field, n: int, degree: int) -> MPoly:
        return cls(field, n, degree, {})

    @classmethod
    def monomial(cls, field: Field, n: int, exps, coeff=1) -> MPoly:
        exps = tuple(exps)
        return cls(field, n, sum(exps), {exps: coeff})

    @classmethod
    def variable(cls, field: Field, n: int, i: int) -> MPoly:
        exps = tuple(1 if j == i else 0 for j in range(n + 1))
        return cls(field, n, 1, {exps: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MPoly)
            and self.field == other.field
            and self.n == other.n
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def _check_compat(self, other: MPoly):
        self.field.check_same(other.field)
        if self.n != other.n:
            raise AmbientMismatch(f"ambient dimension {self.n} vs {other.n}")

    def __add__(self, other: MPoly) -> MPoly:
        self._check_compat(other)
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        add = self.field.add
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = add(out.get(exps, self.field.zero), c)
            if acc == 0:
                out.pop(exps, None)
            else:
                out[exps] = acc
        return MPoly(self.field, self.n, self.degree, out)

    def __sub__(self, other: MPoly) -> MPoly:
        return self + (-other)

    def __neg__(self) -> MPoly:
        neg = self.field.neg
        return MPoly(self.field, self.n, self.degree, {e: neg(c) for e, c in self.terms.items()})

    def scale(self, c) -> MPoly:
        c = self.field.of(c)
        if c == 0:
            return MPoly.zero(self.field, self.n, self.degree)
        mul = self.field.mul
        return MPoly(self.field, self.n, self.degree, {e: mul(c, v) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check_compat(other)
        add, mul = self.field.add, self.field.mul
        out = {}
        zero = self.field.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = add(out.get(e, zero), mul(c1, c2))
                if acc == 0:
                    out.pop(e, None)
                else:
                    out[e] = acc
        return MPoly(self.field, self.n, self.degree + other.degree, out)

    def __rmul__(self, other):
        return self.scale(other)

    def partial_derivative(self, i: int) -> MPoly:
        if not 0 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range")
        if self.degree < 1:
            raise ValueError("constant polynomials have no formal partials here")
        out = {}
        add = self.field.add
        zero = self.field.zero
        for exps, c in self.terms.items():
            m = exps[i]
            if m == 0:
                continue
            new = list(exps)
            new[i] = m - 1
            new = tuple(new)
            acc = add(out.get(new, zero), self.field.mul(c, self.field.of(m)))
            if acc == 0:
                out.pop(new, None)
            else:
                out[new] = acc
        return MPoly(self.field, self.n, self.degree - 1, out)

    # -- text and JSON forms ---------------------------------------------------

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r})"

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            )
            parts.append(term_text(self.field, c, mono, first=not parts))
        return "".join(parts)

    def to_json(self) -> list:
        return [
            {"exponents": list(exps), "coeff": self.field.to_str(c)}
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, field: Field, n: int, degree: int, data: list) -> MPoly:
        terms = {}
        for item in data:
            terms[tuple(item["exponents"])] = field.from_str(str(item["coeff"]))
        return cls(field, n, degree, terms)

    @classmethod
    def from_text(cls, field: Field, n: int, text: str, degree: int | None = None) -> MPoly:
        varnames = [f"x{i}" for i in range(n + 1)]
        raw = parse_terms(field, text, varnames)
        if not raw:
            if degree is None:
                raise ParseError("cannot infer the degree of the zero polynomial")
            return cls.zero(field, n, degree)
        degs = {sum(e) for e, _ in raw}
        if len(degs) > 1:
            raise ParseError(f"inhomogeneous polynomial {text!r}")
        deg = degs.pop()
        if degree is not None and degree != deg:
            raise ParseError(f"expected degree {degree}, found {deg}")
        terms = {}
        for exps, c in raw:
            acc = field.add(terms.get(exps, field.zero), c)
            if acc == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return cls(field, n, deg, terms)




