"""Splitting types of the kernel of an evaluation map on the projective line.

The kernel of a nonzero map O(e+2)^(e-1) + O(e)^(n-e) -> O(de) is a rank
n-2 bundle; its summand degrees are recovered from the section counts of
its twists: the number of summands of degree >= -m equals
h0(ker(m)) - h0(ker(m-1)).  Common factors among the entries are allowed;
left-exactness of global sections keeps the scan valid and only shifts the
total degree by the gcd degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import linalg
from .binforms import BinForm, bf_gcd, mult_matrix
from .errors import InadmissibleType, ZeroMap
from .normalmap import PsiMap


@dataclass(frozen=True)
class SplitType:
    """Multiset of summand degrees, stored in descending order."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @classmethod
    def of(cls, degrees) -> SplitType:
        return cls(tuple(degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def is_balanced(self) -> bool:
        return self.rank == 0 or self.degrees[0] - self.degrees[-1] <= 1

    def __iter__(self):
        return iter(self.degrees)

    def __repr__(self) -> str:
        return f"SplitType({list(self.degrees)})"

    def to_json(self) -> dict:
        return {"degrees": list(self.degrees)}


def entries_gcd(psi: PsiMap) -> BinForm:
    """Monic gcd of the nonzero entries; raises ZeroMap if there are none."""
    nonzero = [entry for entry in psi.entries if not entry.is_zero]
    if not nonzero:
        raise ZeroMap("all entries vanish")
    return reduce(bf_gcd, nonzero)


def h0_twist(psi: PsiMap, m: int) -> int:
    """Sections of the twisted kernel: the nullity of the section-level map.

    Builds the block matrix of multiplication by each entry from
    +H0(O(d_i + m)) to H0(O(de + m)); summands with d_i + m < 0 contribute
    no columns.
    """
    target_dim = psi.target_degree + m + 1
    blocks = []
    total_cols = 0
    for entry, d_i in zip(psi.entries, psi.summand_degrees):
        cols = d_i + m + 1
        if cols <= 0:
            continue
        total_cols += cols
        if target_dim > 0:
            blocks.append(mult_matrix(entry, d_i + m))
    if total_cols == 0:
        return 0
    if target_dim <= 0:
        return total_cols
    field = psi.ctx.field
    mat = [[] for _ in range(target_dim)]
    for block in blocks:
        for r in range(target_dim):
            mat[r].extend(block[r])
    return total_cols - linalg.rank(field, mat)


def _scan_bounds(psi: PsiMap, gcd_degree: int) -> tuple[int, int]:
    ctx, d = psi.ctx, psi.d
    n, e = ctx.n, ctx.e
    d_min = (e * (n - d + 1) - 2) - (n - 3) * (e + 2) - gcd_degree
    return -(e + 3), -d_min + 1


@dataclass
class TwistProfile:
    """Section counts h0(ker(m)) over the scan window, plus degree bookkeeping."""

    psi: PsiMap
    h0: dict[int, int]
    gcd_degree: int
    total_degree: int

    @property
    def rank(self) -> int:
        return self.psi.ctx.n - 2

    def increments(self) -> dict[int, int]:
        ms = sorted(self.h0)
        out = {}
        prev = 0
        for m in ms:
            out[m] = self.h0[m] - prev
            prev = self.h0[m]
        return out


def twist_profile(psi: PsiMap) -> TwistProfile:
    g = entries_gcd(psi).degree
    total = sum(psi.summand_degrees) - psi.target_degree + g
    lo, hi = _scan_bounds(psi, g)
    h0 = {m: h0_twist(psi, m) for m in range(lo, hi + 1)}
    return TwistProfile(psi, h0, g, total)


def splitting_type(psi: PsiMap) -> SplitType:
    """Summand degrees of the kernel, recovered from the twist scan.

    The count of summands of degree exactly u is the second difference of
    the section counts at m = -u; the last summand is pinned by the total
    degree once the others are known.
    """
    g = entries_gcd(psi).degree
    rank = psi.ctx.n - 2
    if rank == 0:
        return SplitType(())
    total = sum(psi.summand_degrees) - psi.target_degree + g
    lo, hi = _scan_bounds(psi, g)
    degrees: list[int] = []
    f_prev = 0
    inc_prev = 0
    for m in range(lo, hi + 1):
        f = h0_twist(psi, m)
        inc = f - f_prev
        degrees.extend([-m] * (inc - inc_prev))
        f_prev, inc_prev = f, inc
        if len(degrees) >= rank - 1:
            break
    if len(degrees) == rank - 1:
        last = total - sum(degrees)
        if degrees and last > degrees[-1]:
            raise AssertionError("twist scan produced inconsistent degrees")
        degrees.append(last)
    if len(degrees) != rank or sum(degrees) != total:
        raise AssertionError("twist scan failed to recover the splitting")
    return SplitType(tuple(degrees))


def balanced_type(n: int, e: int, d: int) -> SplitType:
    """Degrees as equal as possible with total e(n-d+1)-2 over n-2 summands."""
    if not 2 <= e <= n or d < 2:
        raise ValueError("need 2 <= e <= n and d >= 2")
    rank = n - 2
    total = e * (n - d + 1) - 2
    if rank == 0:
        if total != 0:
            raise InadmissibleType(f"no rank-0 bundle of degree {total}")
        return SplitType(())
    base, rem = divmod(total, rank)
    return SplitType((base + 1,) * rem + (base,) * (rank - rem))


def _partitions(total: int, parts: int, max_part: int | None = None):
    """Nonincreasing tuples of `parts` nonnegative integers summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    cap = total if max_part is None else min(total, max_part)
    for first in range(cap, -1, -1):
        if first == 0:
            if total == 0:
                yield (0,) * parts
            return
        if first * parts < total:
            return
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def enumerate_types(n: int, e: int, d: int) -> list[SplitType]:
    """All admissible splitting types for the given curve and degree.

    These are the multisets {e+2-a_i} over e-2 slots joined with {e-b_j}
    over n-e slots, a_i, b_j >= 0, with sum a + sum b = e(d-1)-2.
    """
    if not 2 <= e <= n or d < 2:
        raise ValueError("need 2 <= e <= n and d >= 2")
    budget = e * (d - 1) - 2
    found = set()
    for k in range(budget + 1):
        for a in _partitions(k, e - 2):
            for b in _partitions(budget - k, n - e):
                degrees = tuple(
                    sorted([e + 2 - x for x in a] + [e - y for y in b], reverse=True)
                )
                found.add(degrees)
    return [SplitType(d_) for d_ in sorted(found, reverse=True)]


def h1_end(st: SplitType) -> int:
    """Obstruction count sum over ordered pairs with a_i - a_j <= -2 of (a_j - a_i - 1)."""
    return sum(
        aj - ai - 1
        for ai in st.degrees
        for aj in st.degrees
        if ai - aj <= -2
    )


def split_into_parts(n: int, e: int, d: int, st: SplitType) -> tuple[list[int], list[int]]:
    """Canonical (a, b) presentation of an admissible type, both ascending.

    The largest e-2 degrees become the a-part (a_i = e+2 - degree), the
    remaining n-e degrees the b-part (b_j = e - degree).  If any admissible
    assignment exists this one does, so failure here means the type is not
    admissible for (n, e, d).
    """
    degrees = list(st.degrees)
    if len(degrees) != n - 2:
        raise InadmissibleType(f"rank {len(degrees)} != n - 2 = {n - 2}")
    a_part = [e + 2 - u for u in degrees[: e - 2]]
    b_part = [e - u for u in degrees[e - 2:]]
    if any(a < 0 for a in a_part) or any(b < 0 for b in b_part):
        raise InadmissibleType(f"{st} has summands above the ambient bounds")
    if sum(a_part) + sum(b_part) != e * (d - 1) - 2:
        raise InadmissibleType(f"{st} violates the degree identity for (n,e,d)=({n},{e},{d})")
    return sorted(a_part), sorted(b_part)
