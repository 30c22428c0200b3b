"""Homogeneous binary forms in (s, t) over an exact field.

``coeffs[k]`` is the coefficient of s^(degree-k) t^k.  The zero form keeps
an explicit degree label so that maps between twists of different degrees
stay well typed.
"""

from __future__ import annotations

from ._text import parse_terms, term_text
from .errors import BothZero, DegreeMismatch, ParseError
from .scalars import Field, Scalar


class BinForm:
    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: Field, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.field = field
        self.degree = degree
        if coeffs is None:
            self.coeffs = (field.zero,) * (degree + 1)
        else:
            coeffs = tuple(field.of(c) for c in coeffs)
            if len(coeffs) != degree + 1:
                raise ValueError(f"need {degree + 1} coefficients, got {len(coeffs)}")
            self.coeffs = coeffs

    @classmethod
    def zero(cls, field: Field, degree: int) -> BinForm:
        return cls(field, degree)

    @classmethod
    def monomial(cls, field: Field, s_exp: int, t_exp: int, coeff=1) -> BinForm:
        deg = s_exp + t_exp
        coeffs = [field.zero] * (deg + 1)
        coeffs[t_exp] = field.of(coeff)
        return cls(field, deg, coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinForm)
            and self.field == other.field
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.degree, self.coeffs))

    def __add__(self, other: BinForm) -> BinForm:
        self.field.check_same(other.field)
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        add = self.field.add
        return BinForm(self.field, self.degree, [add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: BinForm) -> BinForm:
        return self + (-other)

    def __neg__(self) -> BinForm:
        neg = self.field.neg
        return BinForm(self.field, self.degree, [neg(a) for a in self.coeffs])

    def scale(self, c) -> BinForm:
        c = self.field.of(c)
        mul = self.field.mul
        return BinForm(self.field, self.degree, [mul(c, a) for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinForm):
            return self.scale(other)
        self.field.check_same(other.field)
        deg = self.degree + other.degree
        out = [self.field.zero] * (deg + 1)
        add, mul = self.field.add, self.field.mul
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] = add(out[i + j], mul(a, b))
        return BinForm(self.field, deg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def evaluate(self, s0, t0) -> Scalar:
        K = self.field
        s0, t0 = K.of(s0), K.of(t0)
        acc = K.zero
        spow = [K.one]
        tpow = [K.one]
        for _ in range(self.degree):
            spow.append(K.mul(spow[-1], s0))
            tpow.append(K.mul(tpow[-1], t0))
        for k, c in enumerate(self.coeffs):
            if c != 0:
                acc = K.add(acc, K.mul(c, K.mul(spow[self.degree - k], tpow[k])))
        return acc

    # -- text and JSON forms ---------------------------------------------------

    def __repr__(self) -> str:
        return f"BinForm({self.to_text()!r})"

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = _monomial_text(self.degree - k, k)
            parts.append(term_text(self.field, c, mono, first=not parts))
        return "".join(parts)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [self.field.to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field: Field, data: dict) -> BinForm:
        return cls(field, data["degree"], [field.from_str(str(c)) for c in data["coeffs"]])

    @classmethod
    def from_text(cls, field: Field, text: str, degree: int | None = None) -> BinForm:
        terms = parse_terms(field, text, ("s", "t"))
        if not terms:
            if degree is None:
                raise ParseError("cannot infer the degree of an empty form")
            return cls.zero(field, degree)
        degs = {se + te for (se, te), _ in terms}
        if len(degs) > 1:
            raise ParseError(f"inhomogeneous form {text!r}")
        deg = degs.pop()
        if degree is not None and degree != deg:
            raise ParseError(f"expected degree {degree}, found {deg}")
        coeffs = [field.zero] * (deg + 1)
        for (se, te), c in terms:
            coeffs[te] = field.add(coeffs[te], c)
        return cls(field, deg, coeffs)


def _monomial_text(s_exp: int, t_exp: int) -> str:
    factors = []
    if s_exp:
        factors.append("s" if s_exp == 1 else f"s^{s_exp}")
    if t_exp:
        factors.append("t" if t_exp == 1 else f"t^{t_exp}")
    return "*".join(factors)






# -- gcd ------------------------------------------------------------------


def _s_content(f: BinForm) -> int:
    """Largest k with s^k dividing f (f nonzero)."""
    top = max(i for i, c in enumerate(f.coeffs) if c != 0)
    return f.degree - top


def _t_content(f: BinForm) -> int:
    return min(i for i, c in enumerate(f.coeffs) if c != 0)


def _poly_mod(field: Field, a: list, b: list) -> list:
    """Remainder of dense univariate division; b has nonzero leading coefficient."""
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv = field.inv(lead)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        q = field.mul(c, inv)
        for j in range(db + 1):
            a[i - db + j] = field.sub(a[i - db + j], field.mul(q, b[j]))
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def bf_gcd(f: BinForm, g: BinForm) -> BinForm:
    """Monic greatest common divisor.

    Extracts the s-power content, then runs Euclid on the dehomogenizations
    in u = t/s.
    """
    f.field.check_same(g.field)
    field = f.field
    if f.is_zero and g.is_zero:
        raise BothZero("gcd of two zero forms")
    if f.is_zero:
        return _monic(g)
    if g.is_zero:
        return _monic(f)
    s_pow = min(_s_content(f), _s_content(g))
    a = list(f.coeffs[: f.degree - _s_content(f) + 1])
    b = list(g.coeffs[: g.degree - _s_content(g) + 1])
    while len(b) > 1 or b[0] != 0:
        a, b = b, _poly_mod(field, a, b)
        if len(b) == 1 and b[0] == 0:
            break
    deg_u = len(a) - 1
    coeffs = list(a) + [field.zero] * s_pow
    return _monic(BinForm(field, deg_u + s_pow, coeffs))


def _monic(f: BinForm) -> BinForm:
    lead = next(c for c in reversed(f.coeffs) if c != 0)
    if lead == f.field.one:
        return f
    return f.scale(f.field.inv(lead))


def mult_matrix(p: BinForm, m: int) -> list[list]:
    """Matrix of h |-> p*h from forms of degree m, in the monomial bases.

    Shape (m + deg p + 1) x (m + 1); column j holds the coefficients of
    p * s^(m-j) t^j.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    field = p.field
    dp = p.degree
    rows = m + dp + 1
    out = [[field.zero] * (m + 1) for _ in range(rows)]
    for j in range(m + 1):
        for i, c in enumerate(p.coeffs):
            if c != 0:
                out[i + j][j] = c
    return out
