"""Exact linear algebra for small matrices over Fraction and int.

Everything in this package is rational, so all routines here work with
``fractions.Fraction`` (or plain ``int``) and never touch floating point.
Matrices are tuples of row tuples; basis lattices are handled as lists of
column vectors.  Sizes never exceed a couple dozen, so the algorithms are
the straightforward ones.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Sequence

Vec = tuple
Mat = tuple


def vec_add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Sequence) -> Vec:
    return tuple(c * a for a in u)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> Mat:
    return tuple(zip(*m))


def block_diag(blocks: Sequence[Sequence[Sequence]]) -> Mat:
    """Assemble square blocks into one block-diagonal matrix."""
    total = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for row in b:
            rows.append((0,) * offset + tuple(row) + (0,) * (total - offset - len(row)))
        offset += len(b)
    return tuple(rows)


def invert(m: Sequence[Sequence]) -> Mat:
    """Inverse of a square matrix, exact Gauss-Jordan over Fraction."""
    n = len(m)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def column_style_hermite(columns: Sequence[Sequence[int]], track: bool = False):
    """Hermite form of the integer lattice spanned by ``columns``.

    Returns the list of nonzero reduced columns (pivots positive, entries
    above each pivot zero, entries in the pivot row to the left reduced into
    ``[0, pivot)``).  With ``track=True`` also returns, for every *zero*
    column of the reduced matrix, the integer combination of the original
    columns that produced it; those combinations form a kernel basis of the
    matrix whose columns were passed in.
    """
    cols = [list(c) for c in columns]
    ncols = len(cols)
    nrows = len(cols[0]) if cols else 0
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)] if track else None

    def combine(j, k, q):
        # col_j -= q * col_k
        cols[j] = [a - q * b for a, b in zip(cols[j], cols[k])]
        if track:
            u[j] = [a - q * b for a, b in zip(u[j], u[k])]

    def swap(j, k):
        cols[j], cols[k] = cols[k], cols[j]
        if track:
            u[j], u[k] = u[k], u[j]

    def negate(j):
        cols[j] = [-a for a in cols[j]]
        if track:
            u[j] = [-a for a in u[j]]

    pivot = 0
    pivot_rows = []
    for row in range(nrows):
        live = [j for j in range(pivot, ncols) if cols[j][row] != 0]
        if not live:
            continue
        # Euclid on the live columns until a single nonzero entry remains.
        while len(live) > 1:
            live.sort(key=lambda j: abs(cols[j][row]))
            j0 = live[0]
            rest = []
            for j in live[1:]:
                q = cols[j][row] // cols[j0][row]
                combine(j, j0, q)
                if cols[j][row] != 0:
                    rest.append(j)
            live = [j0] + rest
        j0 = live[0]
        swap(pivot, j0)
        if cols[pivot][row] < 0:
            negate(pivot)
        # Canonical reduction of earlier columns in this pivot row.
        for j in range(pivot):
            q = cols[j][row] // cols[pivot][row]
            if q:
                combine(j, pivot, q)
        pivot_rows.append(row)
        pivot += 1

    basis = [tuple(c) for c in cols[:pivot]]
    if not track:
        return basis
    kernel = [tuple(u[j]) for j in range(pivot, ncols)]
    return basis, kernel


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[Vec]:
    """Basis of the integer kernel of the matrix with the given rows."""
    columns = [tuple(r[j] for r in rows) for j in range(ncols)]
    _, kernel = column_style_hermite(columns, track=True)
    return kernel


def congruence_lattice(rows: Sequence[Sequence[int]], modulus: int, dim: int) -> list[Vec]:
    """Hermite basis of {t in Z^dim : rows @ t == 0 (mod modulus)}.

    Solved as the projection to the first ``dim`` coordinates of the integer
    kernel of [rows | modulus * I].
    """
    if not rows:
        return [tuple(int(i == j) for i in range(dim)) for j in range(dim)]
    m = len(rows)
    stacked = [list(rows[i]) + [modulus * int(i == j) for j in range(m)] for i in range(m)]
    kernel = integer_kernel(stacked, dim + m)
    heads = [k[:dim] for k in kernel]
    return column_style_hermite(heads)


def reduce_mod_basis(v: Sequence, basis: Sequence[Sequence]) -> Vec:
    """Canonical representative of ``v`` modulo the column lattice ``basis``.

    ``basis`` must be lower triangular with positive diagonal (as produced by
    :func:`column_style_hermite` on a full-rank lattice).  The result lands in
    the half-open fundamental parallelepiped, so two vectors are congruent
    modulo the lattice iff they reduce to the same tuple.
    """
    x = [Fraction(a) for a in v]
    for i, col in enumerate(basis):
        q = floor(x[i] / col[i])
        if q:
            for k in range(i, len(x)):
                x[k] -= q * col[k]
    return tuple(x)


def lcm_denominators(values) -> int:
    out = 1
    for v in values:
        d = Fraction(v).denominator
        g = _gcd(out, d)
        out = out // g * d
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
