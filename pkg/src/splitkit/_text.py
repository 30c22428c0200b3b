"""Shared plain-text term parsing and printing for forms and polynomials."""

from __future__ import annotations

import re

from .errors import ParseError
from .scalars import Field

_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|[a-zA-Z]\w*(?:\^\d+)?|\*)")


def term_text(field: Field, c, mono: str, first: bool) -> str:
    text = field.to_str(c)
    neg = text.startswith("-")
    mag = text[1:] if neg else text
    if mono and mag == "1":
        body = mono
    elif mono:
        body = f"{mag}*{mono}"
    else:
        body = mag
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def parse_terms(field: Field, text: str, varnames) -> list:
    """Parse '2*x0^2*x2 - x1*x3' style text into (exponent tuple, coeff) pairs."""
    pos = 0
    terms = []
    sign = 1
    current_coeff = None
    current_exps = None

    def flush():
        nonlocal current_coeff, current_exps, sign
        if current_exps is None and current_coeff is None:
            return
        coeff = field.of(current_coeff if current_coeff is not None else 1)
        if sign < 0:
            coeff = field.neg(coeff)
        exps = current_exps if current_exps is not None else tuple([0] * len(varnames))
        terms.append((exps, coeff))
        current_coeff = None
        current_exps = None
        sign = 1

    text = text.strip()
    if text in ("", "0"):
        return []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad token at {text[pos:pos + 10]!r}")
        tok = m.group(1)
        pos = m.end()
        if tok in "+-":
            flush()
            sign = -1 if tok == "-" else 1
        elif tok == "*":
            continue
        elif tok[0].isdigit():
            c = field.from_str(tok)
            current_coeff = c if current_coeff is None else field.mul(current_coeff, c)
        else:
            name, _, exp = tok.partition("^")
            power = int(exp) if exp else 1
            try:
                idx = varnames.index(name)
            except ValueError:
                raise ParseError(f"unknown variable {name!r}") from None
            exps = list(current_exps) if current_exps is not None else [0] * len(varnames)
            exps[idx] += power
            current_exps = tuple(exps)
    flush()
    return terms
