"""Exact linear algebra over the integers.

Matrices are lists (or tuples) of rows of Python ints, acting on column
vectors.  Everything here is exact; there is no floating point anywhere in
this package.  The workhorse is `smith_normal_form`, which computes
S @ A @ T = D with S, T unimodular and D diagonal with a divisibility chain;
kernels, integer solving and cohomology-style subquotients are derived
from it.
"""

from __future__ import annotations

Matrix = list[list[int]]
Vector = list[int]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy(a) -> Matrix:
    return [list(row) for row in a]


def shape(a) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def transpose(a) -> Matrix:
    rows, cols = shape(a)
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def mat_mul(a, b) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch: {ra}x{ca} @ {rb}x{cb}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_add(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: int, a) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_vec(a, v: Vector) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def mat_eq(a, b) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def block_cols(a, b) -> Matrix:
    """Horizontal concatenation [a | b] (same number of rows)."""
    return [list(ra) + list(rb) for ra, rb in zip(a, b)]


def smith_normal_form(a) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form of an integer matrix.

    Returns (s, d, t) with s @ a @ t == d, where s and t are square
    unimodular matrices and d is diagonal (in the same shape as a) with
    nonnegative entries satisfying d[0][0] | d[1][1] | ... .
    """
    d = copy(a)
    rows, cols = shape(d)
    s = identity(rows)
    t = identity(cols)

    def row_op(i, j, q):
        # row_i -= q * row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        s[i] = [x - q * y for x, y in zip(s[i], s[j])]

    def col_op(i, j, q):
        # col_i -= q * col_j
        for r in range(rows):
            d[r][i] -= q * d[r][j]
        for r in range(cols):
            t[r][i] -= q * t[r][j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(cols):
            t[r][i], t[r][j] = t[r][j], t[r][i]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        s[i] = [-x for x in s[i]]

    n = min(rows, cols)

    def eliminate(k):
        """Clear row k and column k beyond the diagonal, pivot at (k, k)."""
        while True:
            pivot = None
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    v = abs(d[i][j])
                    if v != 0 and (best is None or v < best):
                        best = v
                        pivot = (i, j)
            if pivot is None:
                return
            pi, pj = pivot
            if pi != k:
                swap_rows(k, pi)
            if pj != k:
                swap_cols(k, pj)
            if d[k][k] < 0:
                negate_row(k)
            for i in range(k + 1, rows):
                if d[i][k] != 0:
                    row_op(i, k, d[i][k] // d[k][k])
            for j in range(k + 1, cols):
                if d[k][j] != 0:
                    col_op(j, k, d[k][j] // d[k][k])
            if all(d[i][k] == 0 for i in range(k + 1, rows)) and all(
                d[k][j] == 0 for j in range(k + 1, cols)
            ):
                return

    for k in range(n):
        eliminate(k)

    # enforce the divisibility chain
    k = 0
    while k < n - 1:
        a_k, a_next = d[k][k], d[k + 1][k + 1]
        if a_k != 0 and a_next % a_k != 0:
            # couple columns k and k+1, then re-eliminate from k
            col_op(k, k + 1, -1)
            for j in range(k, n):
                eliminate(j)
            k = 0
            continue
        k += 1
    return s, d, t


def diagonal(d) -> list[int]:
    rows, cols = shape(d)
    return [d[i][i] for i in range(min(rows, cols))]


def rank(a) -> int:
    _, d, _ = smith_normal_form(a)
    return sum(1 for x in diagonal(d) if x != 0)


def kernel_basis(a) -> Matrix:
    """Columns spanning the integer kernel of a (acting on column vectors)."""
    _, d, t = smith_normal_form(a)
    rows, cols = shape(a)
    diag = diagonal(d) + [0] * (cols - min(rows, cols))
    free = [j for j in range(cols) if diag[j] == 0]
    return [[t[i][j] for j in free] for i in range(cols)]


def solve(a, b: Vector) -> Vector | None:
    """One integer solution x of a @ x = b, or None if there is none."""
    s, d, t = smith_normal_form(a)
    rows, cols = shape(a)
    sb = mat_vec(s, b)
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < min(rows, cols) else 0
        if di == 0:
            if sb[i] != 0:
                return None
        else:
            if sb[i] % di != 0:
                return None
            y[i] = sb[i] // di
    return mat_vec(t, y)


def solve_matrix(a, b) -> Matrix | None:
    """Integer solution X of a @ X = b (columnwise), or None."""
    bt = transpose(b)
    cols = []
    for col in bt:
        x = solve(a, list(col))
        if x is None:
            return None
        cols.append(x)
    return transpose(cols)


def in_column_span(a, v: Vector) -> bool:
    return solve(a, v) is not None


def is_unimodular(a) -> bool:
    rows, cols = shape(a)
    if rows != cols:
        return False
    _, d, _ = smith_normal_form(a)
    return all(x == 1 for x in diagonal(d))


def inverse_unimodular(a) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    s, d, t = smith_normal_form(a)
    if not all(x == 1 for x in diagonal(d)):
        raise ValueError("matrix is not unimodular")
    # a = s^-1 @ d @ t^-1 with d = I, hence a^-1 = t @ s
    return mat_mul(t, s)


class FGAbelian:
    """A finitely generated abelian group Z^free + sum_i Z/t_i, torsion in
    invariant-factor form (each t_i > 1 and t_1 | t_2 | ...)."""

    __slots__ = ("free", "torsion")

    def __init__(self, free: int, torsion: tuple[int, ...] = ()):
        assert free >= 0 and all(t > 1 for t in torsion)
        self.free = free
        self.torsion = tuple(torsion)

    def __eq__(self, other):
        return (
            isinstance(other, FGAbelian)
            and self.free == other.free
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.free, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.free + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def is_trivial(self) -> bool:
        return self.free == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.free:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def to_json(self):
        return {"free": self.free, "torsion": list(self.torsion)}


def subquotient(ker_of, im_of) -> FGAbelian:
    """ker(ker_of) / im(im_of) as a finitely generated abelian group.

    ker_of is a matrix C -> C', im_of a matrix C'' -> C, and
    im(im_of) <= ker(ker_of) is required (the d∘d = 0 situation).
    """
    k = kernel_basis(ker_of)
    krank = shape(k)[1]
    if krank == 0:
        return FGAbelian(0)
    y = solve_matrix(k, im_of)
    if y is None:
        raise ValueError("image not contained in kernel")
    _, d, _ = smith_normal_form(y)
    diag = diagonal(d)
    tor = [x for x in diag if x > 1]
    r = sum(1 for x in diag if x != 0)
    return FGAbelian(krank - r, tuple(tor))
