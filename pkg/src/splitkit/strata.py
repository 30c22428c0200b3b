"""Dimension and codimension bookkeeping for splitting-type strata.

All quantities are line-bundle cohomology sums on the projective line:
h0(O(a)) = max(0, a+1), h1(O(a)) = max(0, -a-1).  The stratum codimension
inside the space of hypersurfaces smooth along the curve is the pair
obstruction count minus the correction (n-e) * z, where z counts the
degree-(e+2) summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .normalmap import phi_matrix
from .rnc import CurveContext
from .splitting import SplitType, enumerate_types, h1_end, split_into_parts


def h0_line(a: int) -> int:
    return max(0, a + 1)


def h1_line(a: int) -> int:
    return max(0, -a - 1)


@dataclass
class StratumReport:
    type: SplitType
    z: int
    h1_end: int
    correction: int
    codim_sigma: int
    dim_sigma: int
    dim_phi_stratum: int

    def to_json(self) -> dict:
        return {
            "degrees": list(self.type.degrees),
            "z": self.z,
            "h1_end": self.h1_end,
            "correction": self.correction,
            "codim_sigma": self.codim_sigma,
            "dim_sigma": self.dim_sigma,
            "dim_phi_stratum": self.dim_phi_stratum,
        }

    def csv_row(self) -> list:
        return [
            ",".join(map(str, self.type.degrees)),
            self.z,
            self.h1_end,
            self.correction,
            self.codim_sigma,
            self.dim_phi_stratum,
        ]


CSV_COLUMNS = ["degrees", "z", "h1_end", "correction", "codim", "dim_phi_stratum"]


def stratum_report(ctx: CurveContext, d: int, st: SplitType) -> StratumReport:
    """Evaluate every stratum formula for one admissible type."""
    n, e = ctx.n, ctx.e
    split_into_parts(n, e, d, st)
    z = sum(1 for u in st.degrees if u == e + 2)
    h1 = h1_end(st)
    correction = (n - e) * z
    codim = h1 - correction
    dim_sigma = comb(n + d, d) - (d * e + 1)
    h0_hom = sum(
        (e - 1) * h0_line(e + 2 - u) + (n - e) * h0_line(e - u) for u in st.degrees
    )
    h0_end = sum(h0_line(u - v) for u in st.degrees for v in st.degrees)
    dim_phi = h0_hom + 1 - h0_end
    return StratumReport(st, z, h1, correction, codim, dim_sigma, dim_phi)


def quadric_phi_dims(ctx: CurveContext) -> dict:
    """Closed forms for the degree-2 kernel and image of the evaluation map."""
    n, e = ctx.n, ctx.e
    return {
        "h0_Isq": (n - e) * (n - e + 1) // 2,
        "image_dim": (2 * n * e + 2 * n - 3 * e - e * e) // 2,
    }


def census(ctx: CurveContext, d: int) -> list[StratumReport]:
    """One report per admissible type, sorted by codimension."""
    reports = [stratum_report(ctx, d, st) for st in enumerate_types(ctx.n, ctx.e, d)]
    reports.sort(key=lambda r: (r.codim_sigma, tuple(-u for u in r.type.degrees)))
    return reports


def phi_rank_nullity(ctx: CurveContext, d: int) -> tuple[int, int]:
    """Exact rank and nullity of the evaluation-map matrix on the ideal."""
    from . import linalg

    mat = phi_matrix(ctx, d)
    cols = len(mat[0]) if mat else 0
    r = linalg.rank(ctx.field, mat)
    return r, cols - r
