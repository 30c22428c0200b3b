"""The degree-e rational normal curve in projective n-space.

The curve is parametrized by (s^e : s^(e-1) t : ... : t^e : 0 : ... : 0).
Its homogeneous ideal is generated by the quadrics
Q_ij = x_i x_(j-1) - x_(i-1) x_j  (1 <= i < j <= e) together with the
linear forms x_(e+1), ..., x_n.  This module provides restriction to the
curve, monomial lifts of binary monomials, a basis of the degree-d part of
the ideal, and the straightening algorithm that rewrites an ideal member
as an explicit combination of the generators.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from . import linalg
from .binforms import BinForm
from .errors import BetaOutOfRange, IndexOutOfRange, NotInIdeal
from .mpoly import MPoly
from .scalars import Field


@dataclass(frozen=True)
class CurveContext:
    """Ambient dimension n, curve degree e with 2 <= e <= n, and the scalar field."""

    n: int
    e: int
    field: Field

    def __post_init__(self):
        if not 2 <= self.e <= self.n:
            raise ValueError(f"need 2 <= e <= n, got e={self.e}, n={self.n}")


@lru_cache(maxsize=None)
def monomial_exponents(n: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given degree in n+1 variables, lex descending."""
    out = []
    for bars in combinations(range(degree + n), n):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + n - 1 - prev)
        out.append(tuple(exps))
    out.sort(reverse=True)
    return tuple(out)


def monomial_weight(exps) -> int:
    """Exponent of t in the restriction of the monomial to the curve."""
    return sum(i * m for i, m in enumerate(exps))


def restrict(ctx: CurveContext, F: MPoly) -> BinForm:
    """Substitute x_i -> s^(e-i) t^i for i <= e and x_i -> 0 beyond."""
    e, K = ctx.e, ctx.field
    deg = e * F.degree
    coeffs = [K.zero] * (deg + 1)
    for exps, c in F.terms.items():
        if any(exps[i] for i in range(e + 1, ctx.n + 1)):
            continue
        beta = monomial_weight(exps)
        coeffs[beta] = K.add(coeffs[beta], c)
    return BinForm(K, deg, coeffs)


def quadric_gen(ctx: CurveContext, i: int, j: int) -> MPoly:
    """The generator x_i x_(j-1) - x_(i-1) x_j."""
    if not 1 <= i < j <= ctx.e:
        raise IndexOutOfRange(f"need 1 <= i < j <= e={ctx.e}, got ({i}, {j})")
    n = ctx.n

    def expvec(a, b):
        v = [0] * (n + 1)
        v[a] += 1
        v[b] += 1
        return tuple(v)

    return MPoly(ctx.field, n, 2, {expvec(i, j - 1): 1, expvec(i - 1, j): ctx.field.neg(ctx.field.one)})


def lift_monomial(ctx: CurveContext, beta: int, k: int) -> MPoly:
    """The balanced degree-k monomial restricting to s^(ek-beta) t^beta.

    With q = beta // k and r = beta - k*q this is x_q^(k-r) x_(q+1)^r.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= beta <= ctx.e * k:
        raise BetaOutOfRange(f"need 0 <= beta <= e*k = {ctx.e * k}, got {beta}")
    q, r = divmod(beta, k)
    exps = [0] * (ctx.n + 1)
    exps[q] += k - r
    if r:
        exps[q + 1] += r
    return MPoly.monomial(ctx.field, ctx.n, exps)


def restriction_matrix(ctx: CurveContext, d: int):
    """Matrix of degree-d restriction to the curve in the monomial bases.

    Rows are indexed by the t-exponent 0..de, columns by the lex-descending
    degree-d monomials of the ambient space.
    """
    K = ctx.field
    monos = monomial_exponents(ctx.n, d)
    rows = [[K.zero] * len(monos) for _ in range(d * ctx.e + 1)]
    one = K.one
    for col, exps in enumerate(monos):
        if any(exps[i] for i in range(ctx.e + 1, ctx.n + 1)):
            continue
        rows[monomial_weight(exps)][col] = one
    return rows


@lru_cache(maxsize=None)
def ideal_basis(ctx: CurveContext, d: int) -> tuple[MPoly, ...]:
    """A basis of the degree-d forms vanishing on the curve.

    Computed as the exact nullspace of the restriction matrix; the size is
    C(n+d, d) - (de + 1).
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    monos = monomial_exponents(ctx.n, d)
    kernel = linalg.nullspace(ctx.field, restriction_matrix(ctx, d), ncols=len(monos))
    basis = []
    for vec in kernel:
        terms = {monos[i]: c for i, c in enumerate(vec) if c != 0}
        basis.append(MPoly(ctx.field, ctx.n, d, terms))
    return tuple(basis)


@dataclass
class IdealDecomposition:
    """An explicit presentation F = sum F_ij Q_ij + sum G_k x_k.

    quad_coeffs maps (i, j) with 1 <= i < j <= e to the degree-(d-2)
    cofactor of Q_ij; lin_coeffs maps k with e+1 <= k <= n to the
    degree-(d-1) cofactor of x_k.
    """

    ctx: CurveContext
    degree: int
    quad_coeffs: dict = dc_field(default_factory=dict)
    lin_coeffs: dict = dc_field(default_factory=dict)

    def reconstruct(self) -> MPoly:
        ctx = self.ctx
        acc = MPoly.zero(ctx.field, ctx.n, self.degree)
        for (i, j), cof in self.quad_coeffs.items():
            acc = acc + cof * quadric_gen(ctx, i, j)
        for k, cof in self.lin_coeffs.items():
            acc = acc + cof * MPoly.variable(ctx.field, ctx.n, k)
        return acc


def _support_span(exps) -> tuple[int, int]:
    lo = hi = -1
    for i, m in enumerate(exps):
        if m:
            if lo < 0:
                lo = i
            hi = i
    return lo, hi


def straighten_decompose(ctx: CurveContext, F: MPoly) -> IdealDecomposition:
    """Decompose an ideal member into generator coordinates.

    Terms divisible by a variable beyond x_e go to the linear cofactors
    (largest such variable wins).  On the remainder, the lexicographically
    smallest term containing an index pair (a, b) with b - a >= 2 is
    rewritten through x_a x_b = x_(a+1) x_(b-1) - Q_(a+1, b) until every
    term has index gaps at most 1; that normal form restricts injectively,
    so it must vanish, otherwise the input is not in the ideal.
    """
    if F.n != ctx.n:
        raise ValueError("polynomial lives in the wrong ambient space")
    ctx.field.check_same(F.field)
    if F.degree < 2:
        raise ValueError("decomposition needs degree at least 2")
    K = ctx.field
    n, e, d = ctx.n, ctx.e, F.degree

    quad: dict[tuple[int, int], dict] = {}
    lin: dict[int, dict] = {}
    work: dict[tuple, object] = {}

    def bump(table, key, exps, c):
        bucket = table.setdefault(key, {})
        acc = K.add(bucket.get(exps, K.zero), c)
        if acc == 0:
            bucket.pop(exps, None)
        else:
            bucket[exps] = acc

    for exps, c in F.terms.items():
        k = max((i for i in range(e + 1, n + 1) if exps[i]), default=-1)
        if k >= 0:
            reduced = list(exps)
            reduced[k] -= 1
            bump(lin, k, tuple(reduced), c)
        else:
            work[exps] = c

    heap = [exps for exps in work if _has_gap(exps)]
    heapq.heapify(heap)
    while heap:
        exps = heapq.heappop(heap)
        c = work.pop(exps, None)
        if c is None:
            continue
        a, b = _support_span(exps)
        if b - a < 2:
            work[exps] = c
            continue
        u = list(exps)
        u[a] -= 1
        u[b] -= 1
        bump(quad, (a + 1, b), tuple(u), K.neg(c))
        u[a + 1] += 1
        u[b - 1] += 1
        new = tuple(u)
        acc = K.add(work.get(new, K.zero), c)
        if acc == 0:
            work.pop(new, None)
        else:
            if new not in work and _has_gap(new):
                heapq.heappush(heap, new)
            work[new] = acc

    if work:
        raise NotInIdeal(MPoly(K, n, d, work))

    dec = IdealDecomposition(ctx, d)
    for key, bucket in quad.items():
        if bucket:
            dec.quad_coeffs[key] = MPoly(K, n, d - 2, bucket)
    for key, bucket in lin.items():
        if bucket:
            dec.lin_coeffs[key] = MPoly(K, n, d - 1, bucket)
    return dec


def _has_gap(exps) -> bool:
    lo, hi = _support_span(exps)
    return hi - lo >= 2
