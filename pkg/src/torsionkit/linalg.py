"""Exact dense linear algebra over Q or Q(t) under the row-vector convention.

A linear map's matrix has its rows indexed by the domain basis, so a row
vector x maps to x @ A and composition reads left to right:
x @ A @ B applies A first.  0xn and nx0 matrices are legal; the 0x0
determinant is 1 (empty product), which the torsion brackets rely on.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    NoSolution,
    NotSameSpan,
    NotSquare,
    ShapeMismatch,
    Singular,
)
from .fields import Ring


class Matrix:
    """Immutable dense matrix of exact scalars over a fixed ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries, cols: int | None = None):
        rows = tuple(tuple(ring.coerce(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeMismatch("rows of unequal length")
            if cols is not None and cols != width:
                raise ShapeMismatch(f"expected {cols} columns, found {width}")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(ring: Ring, n: int) -> Matrix:
        return Matrix(
            ring,
            [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)],
            cols=n,
        )

    @staticmethod
    def zeros(ring: Ring, rows: int, cols: int) -> Matrix:
        return Matrix(ring, [[ring.zero] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, idx: tuple[int, int]):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(x == zero for row in self.entries for x in row)

    def transpose(self) -> Matrix:
        return Matrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ring is not other.ring:
            raise DimensionMismatch("matrix product over different rings")
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            arow = self.entries[i]
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = arow[k]
                    if a == zero:
                        continue
                    acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out, cols=other.cols)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch("matrix sum of different shapes")
        return Matrix(
            self.ring,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch("matrix difference of different shapes")
        return Matrix(
            self.ring,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            cols=self.cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.ring, [[-a for a in row] for row in self.entries], cols=self.cols)

    def scale(self, s) -> Matrix:
        s = self.ring.coerce(s)
        return Matrix(self.ring, [[s * a for a in row] for row in self.entries], cols=self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring.name, self.cols, self.entries))

    def to_lists(self) -> list[list]:
        return [list(row) for row in self.entries]

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.to_str(x) for x in row) for row in self.entries
        )
        return f"Matrix({self.ring.name} {self.rows}x{self.cols}: [{body}])"


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise DimensionMismatch("hstack of different row counts")
    return Matrix(
        a.ring,
        [ra + rb for ra, rb in zip(a.entries, b.entries)],
        cols=a.cols + b.cols,
    )


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise DimensionMismatch("vstack of different column counts")
    return Matrix(a.ring, list(a.entries) + list(b.entries), cols=a.cols)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    ring = a.ring
    zero = ring.zero
    out = []
    for row in a.entries:
        out.append(list(row) + [zero] * b.cols)
    for row in b.entries:
        out.append([zero] * a.cols + list(row))
    return Matrix(ring, out, cols=a.cols + b.cols)


def row_times_matrix(x, m: Matrix) -> tuple:
    if len(x) != m.rows:
        raise DimensionMismatch("row length does not match matrix rows")
    zero = m.ring.zero
    out = [zero] * m.cols
    for k, xk in enumerate(x):
        if xk == zero:
            continue
        mk = m.entries[k]
        for j in range(m.cols):
            out[j] = out[j] + xk * mk[j]
    return tuple(out)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row echelon form with pivot columns and rank."""
    _require_field(m)
    zero, one = m.ring.zero, m.ring.one
    work = [list(row) for row in m.entries]
    pivots = []
    pr = 0
    for pc in range(m.cols):
        pivot_row = None
        for i in range(pr, m.rows):
            if work[i][pc] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            work[pr], work[pivot_row] = work[pivot_row], work[pr]
        p = work[pr][pc]
        if p != one:
            inv = one / p
            work[pr] = [inv * x for x in work[pr]]
        for i in range(m.rows):
            if i == pr:
                continue
            f = work[i][pc]
            if f == zero:
                continue
            work[i] = [a - f * b for a, b in zip(work[i], work[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return Matrix(m.ring, work, cols=m.cols), tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def determinant(m: Matrix):
    """Exact determinant by Gaussian elimination; det of the 0x0 matrix is 1."""
    _require_field(m)
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    ring = m.ring
    if n == 0:
        return ring.one
    zero = ring.zero
    work = [list(row) for row in m.entries]
    det = ring.one
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if work[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            det = -det
        p = work[c][c]
        det = det * p
        for i in range(c + 1, n):
            f = work[i][c]
            if f == zero:
                continue
            f = f / p
            work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return det


def matrix_inverse(m: Matrix) -> Matrix:
    _require_field(m)
    if m.rows != m.cols:
        raise NotSquare("inverse of a non-square matrix")
    n = m.rows
    aug = hstack(m, Matrix.identity(m.ring, n))
    r, _, rk = rref(aug)
    if rk < n or any(r.entries[i][i] != m.ring.one for i in range(n)):
        raise Singular("matrix is not invertible")
    return Matrix(m.ring, [row[n:] for row in r.entries], cols=n)


class RowBasis:
    """Ordered basis of a subspace of F^n: independent rows in ambient coordinates."""

    __slots__ = ("ring", "ambient_dim", "vectors")

    def __init__(self, ring: Ring, ambient_dim: int, vectors, check: bool = True):
        vecs = tuple(tuple(ring.coerce(x) for x in v) for v in vectors)
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch("basis vector of wrong length")
        if check and vecs:
            if rank(Matrix(ring, vecs, cols=ambient_dim)) != len(vecs):
                raise ValueError("basis rows are linearly dependent")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "vectors", vecs)

    def __setattr__(self, name, value):
        raise AttributeError("RowBasis is immutable")

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def matrix(self) -> Matrix:
        return Matrix(self.ring, self.vectors, cols=self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, RowBasis):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.ring.name, self.ambient_dim, self.vectors))

    def __repr__(self):
        rows = "; ".join(
            " ".join(self.ring.to_str(x) for x in v) for v in self.vectors
        )
        return f"RowBasis(dim {len(self)} in F^{self.ambient_dim}: [{rows}])"


def _normalize_first_nonzero(ring: Ring, v: list) -> tuple:
    zero, one = ring.zero, ring.one
    for x in v:
        if x != zero:
            if x != one:
                inv = one / x
                return tuple(inv * y for y in v)
            return tuple(v)
    return tuple(v)


def kernel_basis(m: Matrix) -> RowBasis:
    """Canonical basis of the left null space { x : x @ m = 0 }.

    Derived from the RREF of the transpose: one vector per free variable in
    increasing index order, each scaled so its first nonzero entry is 1.
    """
    _require_field(m)
    ring = m.ring
    n = m.rows
    if n == 0:
        return RowBasis(ring, 0, (), check=False)
    r, pivots, _ = rref(m.transpose())
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    zero = ring.zero
    vectors = []
    for f in free:
        v = [zero] * n
        v[f] = ring.one
        for k, p in enumerate(pivots):
            v[p] = -r.entries[k][f]
        vectors.append(_normalize_first_nonzero(ring, v))
    return RowBasis(ring, n, vectors, check=False)


def image_basis(m: Matrix) -> tuple[RowBasis, tuple[int, ...]]:
    """Canonical basis of the row space plus the rows realizing it.

    Scans the rows of m top to bottom and keeps each row that grows the
    span; the kept rows form the basis and their indices are a lifting of
    it back into the domain.
    """
    _require_field(m)
    ring = m.ring
    zero = ring.zero
    echelon: list[tuple[int, tuple]] = []  # (pivot column, reduced row)

    def reduce(vec):
        v = list(vec)
        for pc, er in echelon:
            f = v[pc]
            if f != zero:
                v = [a - f * b for a, b in zip(v, er)]
        for j, x in enumerate(v):
            if x != zero:
                inv = ring.one / x
                return j, tuple(inv * y for y in v)
        return None, None

    kept = []
    lifting = []
    for i in range(m.rows):
        pc, reduced = reduce(m.entries[i])
        if pc is None:
            continue
        kept.append(m.entries[i])
        lifting.append(i)
        echelon.append((pc, reduced))
        echelon.sort(key=lambda item: item[0])
    return RowBasis(ring, m.cols, kept, check=False), tuple(lifting)


def solve_row(a: Matrix, target) -> tuple:
    """One exact solution x of x @ a = target, free coordinates set to 0."""
    _require_field(a)
    ring = a.ring
    target = tuple(ring.coerce(x) for x in target)
    if len(target) != a.cols:
        raise DimensionMismatch("target length does not match matrix columns")
    # x @ a = target  <=>  a^T x^T = target^T
    at = a.transpose()
    aug = hstack(at, Matrix(ring, [[x] for x in target], cols=1))
    r, pivots, _ = rref(aug)
    zero = ring.zero
    if a.rows in pivots:
        raise NoSolution("target is not in the row space")
    x = [zero] * a.rows
    for k, p in enumerate(pivots):
        x[p] = r.entries[k][a.rows]
    return tuple(x)


def transition_matrix(b: RowBasis, b2: RowBasis) -> Matrix:
    """Matrix T with b[i] = sum_j T[i][j] * b2[j] for bases of the same span."""
    if b.ring is not b2.ring:
        raise DimensionMismatch("bases over different rings")
    if b.ambient_dim != b2.ambient_dim or len(b) != len(b2):
        raise DimensionMismatch("bases of different sizes")
    m2 = b2.matrix()
    rows = []
    for v in b.vectors:
        try:
            rows.append(solve_row(m2, v))
        except NoSolution as exc:
            raise NotSameSpan("bases do not span the same subspace") from exc
    return Matrix(b.ring, rows, cols=len(b2))


def _require_field(m: Matrix) -> None:
    if not m.ring.is_field:
        raise TypeError(f"operation requires a field, not {m.ring.name}")
