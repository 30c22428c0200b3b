"""Evaluation maps from the ambient normal bundle of the curve to O(de).

A degree-d hypersurface F through the curve induces a map
psi_F : O(e+2)^(e-1) + O(e)^(n-e) -> O(de), stored as one binary form per
summand: positions 1..e-1 carry the c-entries of degree e(d-1)-2, the
remaining n-e positions carry the restricted linear cofactors of degree
e(d-1).  The map F -> psi_F is linear and independent of the chosen
generator decomposition of F.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binforms import BinForm
from .mpoly import MPoly
from .rnc import CurveContext, ideal_basis, restrict, straighten_decompose
from .scalars import Field


@dataclass
class PsiMap:
    ctx: CurveContext
    d: int
    entries: tuple[BinForm, ...]

    def __post_init__(self):
        self.entries = tuple(self.entries)
        e, n = self.ctx.e, self.ctx.n
        if len(self.entries) != n - 1:
            raise ValueError(f"need {n - 1} entries, got {len(self.entries)}")
        for pos, form in enumerate(self.entries, start=1):
            want = self.c_degree if pos <= e - 1 else self.g_degree
            if form.degree != want:
                raise ValueError(f"entry {pos} has degree {form.degree}, expected {want}")

    @property
    def c_degree(self) -> int:
        return self.ctx.e * (self.d - 1) - 2

    @property
    def g_degree(self) -> int:
        return self.ctx.e * (self.d - 1)

    @property
    def target_degree(self) -> int:
        return self.ctx.e * self.d

    @property
    def summand_degrees(self) -> tuple[int, ...]:
        e, n = self.ctx.e, self.ctx.n
        return (e + 2,) * (e - 1) + (e,) * (n - e)

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for entry in self.entries)

    def __add__(self, other: PsiMap) -> PsiMap:
        if self.ctx != other.ctx or self.d != other.d:
            raise ValueError("cannot add maps with different contexts")
        return PsiMap(self.ctx, self.d, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> PsiMap:
        return PsiMap(self.ctx, self.d, tuple(entry.scale(c) for entry in self.entries))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PsiMap)
            and self.ctx == other.ctx
            and self.d == other.d
            and self.entries == other.entries
        )

    def flatten(self) -> list:
        """Concatenated coefficient vectors, c-entries then linear entries, ascending t."""
        out = []
        for entry in self.entries:
            out.extend(entry.coeffs)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.ctx.n,
            "e": self.ctx.e,
            "d": self.d,
            "entries": [entry.to_json() for entry in self.entries],
        }

    @classmethod
    def from_json(cls, field: Field, data: dict) -> PsiMap:
        ctx = CurveContext(data["n"], data["e"], field)
        entries = tuple(BinForm.from_json(field, item) for item in data["entries"])
        return cls(ctx, data["d"], entries)


def zero_psi(ctx: CurveContext, d: int) -> PsiMap:
    e, n = ctx.e, ctx.n
    cd = e * (d - 1) - 2
    gd = e * (d - 1)
    entries = [BinForm.zero(ctx.field, cd) for _ in range(e - 1)]
    entries += [BinForm.zero(ctx.field, gd) for _ in range(n - e)]
    return PsiMap(ctx, d, tuple(entries))


def psi_from_row(ctx: CurveContext, d: int, row) -> PsiMap:
    """Inverse of :meth:`PsiMap.flatten`."""
    e, n = ctx.e, ctx.n
    cd = e * (d - 1) - 2
    gd = e * (d - 1)
    entries = []
    pos = 0
    for _ in range(e - 1):
        entries.append(BinForm(ctx.field, cd, row[pos:pos + cd + 1]))
        pos += cd + 1
    for _ in range(n - e):
        entries.append(BinForm(ctx.field, gd, row[pos:pos + gd + 1]))
        pos += gd + 1
    return PsiMap(ctx, d, tuple(entries))


def psi_from_poly(ctx: CurveContext, d: int, F: MPoly) -> PsiMap:
    """The evaluation map of a degree-d polynomial vanishing on the curve.

    With F = sum F_ij Q_ij + sum G_k x_k, the c-entry at position l collects
    restrict(F_ij) * s^(e-j-i+l) t^(j+i-l-2) over all (i, j) with
    i <= l <= j-1, and the entry at position e-1+k is restrict(G_(e+k)).
    """
    if F.degree != d:
        raise ValueError(f"polynomial degree {F.degree} does not match d={d}")
    if d < 2:
        raise ValueError("d must be at least 2")
    dec = straighten_decompose(ctx, F)
    K, e, n = ctx.field, ctx.e, ctx.n
    cd = e * (d - 1) - 2
    c_entries = [BinForm.zero(K, cd) for _ in range(e - 1)]
    for (i, j), cof in dec.quad_coeffs.items():
        rest = restrict(ctx, cof)
        if rest.is_zero:
            continue
        for l in range(i, j):
            shift = BinForm.monomial(K, e - j - i + l, j + i - l - 2)
            c_entries[l - 1] = c_entries[l - 1] + rest * shift
    g_entries = []
    for k in range(e + 1, n + 1):
        cof = dec.lin_coeffs.get(k)
        if cof is None:
            g_entries.append(BinForm.zero(K, e * (d - 1)))
        else:
            g_entries.append(restrict(ctx, cof))
    return PsiMap(ctx, d, tuple(c_entries + g_entries))


def phi_row_count(ctx: CurveContext, d: int) -> int:
    e, n = ctx.e, ctx.n
    return (e - 1) * (e * (d - 1) - 1) + (n - e) * (e * (d - 1) + 1)


@lru_cache(maxsize=None)
def phi_matrix(ctx: CurveContext, d: int):
    """Matrix of F -> psi_F on the degree-d part of the curve ideal.

    Rows run over the concatenated entry coefficients (see
    :meth:`PsiMap.flatten`), columns over :func:`ideal_basis`.
    """
    basis = ideal_basis(ctx, d)
    nrows = phi_row_count(ctx, d)
    cols = [psi_from_poly(ctx, d, F).flatten() for F in basis]
    return [[col[r] for col in cols] for r in range(nrows)]
