"""Dense exact linear algebra over a :class:`~splitkit.scalars.Field`.

Matrices are plain lists of row lists.  Elimination is ordinary
Gauss-Jordan with exact entries (Fraction or residue), so ranks and
nullspaces are certificates, not numerical estimates.  The prime-field
path works on raw ints for speed; the rational path on Fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Field

Matrix = list


def _rref_frac(rows: list[list[Fraction]], ncols: int):
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            rows[r] = [x * inv for x in rows[r]]
        row_r = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _rref_mod(p: int, rows: list[list[int]], ncols: int):
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        row_r = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c] % p
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(field: Field, mat) -> tuple[list, list[int]]:
    """Reduced row echelon form (on a copy) and the pivot column indices."""
    if not mat or not mat[0]:
        return [list(row) for row in mat], []
    ncols = len(mat[0])
    rows = [list(row) for row in mat]
    if field.is_rationals:
        return _rref_frac(rows, ncols)
    return _rref_mod(field.modulus, rows, ncols)


def rank(field: Field, mat) -> int:
    return len(rref(field, mat)[1])


def nullity(field: Field, mat) -> int:
    if not mat:
        return 0
    ncols = len(mat[0])
    return ncols - rank(field, mat)


def nullspace(field: Field, mat, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel: one vector per free column, canonical form.

    The vector for free column f has a 1 at position f and the negated
    reduced entries at the pivot positions.
    """
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    if ncols == 0:
        return []
    red, pivots = rref(field, mat)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [field.zero] * ncols
        vec[f] = field.one
        for r, c in enumerate(pivots):
            entry = red[r][f]
            if entry != 0:
                vec[c] = field.neg(entry)
        basis.append(vec)
    return basis


def identity(field: Field, k: int) -> list[list]:
    one, zero = field.one, field.zero
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def mat_mul(field: Field, a, b) -> list[list]:
    nb = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else []
    out = []
    for row in a:
        out.append([
            _dot(field, row, col) for col in bt
        ] if bt else [field.zero] * nb)
    return out


def _dot(field: Field, u, v):
    acc = field.zero
    for x, y in zip(u, v):
        if x != 0 and y != 0:
            acc = field.add(acc, field.mul(x, y))
    return acc


def matvec(field: Field, mat, vec) -> list:
    return [_dot(field, row, vec) for row in mat]


def mat_sub(field: Field, a, b) -> list[list]:
    return [[field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(mat) -> list[list]:
    return [list(col) for col in zip(*mat)] if mat else []


def invert(field: Field, mat) -> list[list]:
    """Inverse of a square matrix; raises ValueError when singular."""
    k = len(mat)
    aug = [list(row) + ident_row for row, ident_row in zip(mat, identity(field, k))]
    red, pivots = rref(field, aug)
    if pivots != list(range(k)):
        raise ValueError("matrix is singular")
    return [row[k:] for row in red]
