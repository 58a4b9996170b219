"""Based chain complexes of finite-dimensional spaces.

A complex of length m stores dims (n_0 .. n_m) and boundary matrices
d_0 .. d_{m-1}, where d_i maps degree i+1 to degree i and has shape
n_{i+1} x n_i under the row convention.  The distinguished basis of each
degree is the standard coordinate basis; arbitrary based complexes are
modelled by change-of-basis chain isomorphisms instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegreeOutOfRange, FieldMismatch, NotAComplex, ShapeMismatch
from .fields import QQ, Ring
from .linalg import Matrix, RowBasis, block_diag, image_basis, kernel_basis, rank, vstack


@dataclass(frozen=True)
class BasedChainComplex:
    ring: Ring
    dims: tuple[int, ...]
    boundaries: tuple[Matrix, ...]

    @property
    def length(self) -> int:
        return len(self.dims) - 1

    def boundary(self, i: int) -> Matrix:
        """d_i as a matrix, including the zero maps at the two ends."""
        if 0 <= i < len(self.boundaries):
            return self.boundaries[i]
        if i == -1:
            return Matrix.zeros(self.ring, self.dims[0], 0)
        if i == self.length:
            return Matrix.zeros(self.ring, 0, self.dims[i])
        raise DegreeOutOfRange(f"boundary index {i} outside 0..{self.length - 1}")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def make_complex(ring: Ring, dims, boundaries) -> BasedChainComplex:
    dims = tuple(int(n) for n in dims)
    if not dims:
        raise ShapeMismatch("a complex needs at least one degree")
    if any(n < 0 for n in dims):
        raise ShapeMismatch("negative dimension")
    mats = tuple(
        b if isinstance(b, Matrix) else Matrix(ring, b, cols=dims[i])
        for i, b in enumerate(boundaries)
    )
    c = BasedChainComplex(ring, dims, mats)
    validate_complex(c)
    return c


def validate_complex(c: BasedChainComplex) -> None:
    """Check shapes and that consecutive boundaries compose to zero."""
    m = c.length
    if len(c.boundaries) != m:
        raise ShapeMismatch(
            f"expected {m} boundary matrices, found {len(c.boundaries)}"
        )
    for i, b in enumerate(c.boundaries):
        if b.ring is not c.ring:
            raise FieldMismatch(
                f"boundary {i} is over {b.ring.name}, complex over {c.ring.name}"
            )
        if b.shape != (c.dims[i + 1], c.dims[i]):
            raise ShapeMismatch(
                f"boundary {i} has shape {b.shape}, expected "
                f"({c.dims[i + 1]}, {c.dims[i]})"
            )
    # x (d_i) (d_{i-1}) composes the two maps out of degree i+1
    for i in range(1, m):
        if not (c.boundaries[i] @ c.boundaries[i - 1]).is_zero:
            raise NotAComplex(i)


def zero_complex(ring: Ring, m: int) -> BasedChainComplex:
    dims = (0,) * (m + 1)
    mats = tuple(Matrix.zeros(ring, 0, 0) for _ in range(m))
    return BasedChainComplex(ring, dims, mats)


def pad_complex(c: BasedChainComplex, length: int) -> BasedChainComplex:
    """Extend with zero spaces at the top so the complex has the given length."""
    if length < c.length:
        raise DegreeOutOfRange("cannot pad to a shorter length")
    if length == c.length:
        return c
    dims = c.dims + (0,) * (length - c.length)
    mats = list(c.boundaries)
    for i in range(c.length, length):
        mats.append(Matrix.zeros(c.ring, 0, dims[i]))
    return BasedChainComplex(c.ring, dims, tuple(mats))


def common_length(*cs: BasedChainComplex) -> int:
    return max(c.length for c in cs)


@dataclass(frozen=True)
class DegreeData:
    """Canonical bases attached to one degree of a complex."""

    cycles: RowBasis            # basis of Z_i = Ker d_{i-1}, rows in C_i
    boundary_basis: RowBasis    # basis b_i of B_i = Im d_i, rows in C_i
    lifting_rows: tuple[int, ...]   # rows of C_{i+1} whose d_i-images are b_i
    boundary_lifting: RowBasis  # liftings of b_{i-1}: rows in C_i
    homology_reps: RowBasis     # h_i: rows in Z_i independent modulo B_i
    boundary_rank: int          # x_i = dim B_i
    betti: int                  # y_i = dim H_i


@dataclass(frozen=True)
class HomologyData:
    complex: BasedChainComplex
    degrees: tuple[DegreeData, ...]

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(d.betti for d in self.degrees)

    @property
    def boundary_ranks(self) -> tuple[int, ...]:
        return tuple(d.boundary_rank for d in self.degrees)

    def composite_basis(self, i: int) -> Matrix:
        """The n_i x n_i matrix whose rows are (b_i, h_i, liftings of b_{i-1})."""
        d = self.degrees[i]
        n = self.complex.dims[i]
        ring = self.complex.ring
        rows = list(d.boundary_basis) + list(d.homology_reps) + list(d.boundary_lifting)
        return Matrix(ring, rows, cols=n)


def _unit_rows(ring: Ring, n: int, indices) -> list[tuple]:
    rows = []
    for idx in indices:
        row = [ring.zero] * n
        row[idx] = ring.one
        rows.append(tuple(row))
    return rows


@lru_cache(maxsize=None)
def homology_data(c: BasedChainComplex) -> HomologyData:
    """Canonical cycle/boundary/homology bases with liftings, per degree.

    Deterministic for a given complex: image bases come from a greedy row
    scan of each boundary matrix (so the liftings are standard basis
    vectors), and homology representatives are the kernel-basis vectors
    that stay independent modulo the boundaries, scanned in order.
    """
    validate_complex(c)
    if not c.ring.is_field:
        raise TypeError("homology bases need field coefficients")
    m = c.length
    ring = c.ring
    images: list[tuple[RowBasis, tuple[int, ...]]] = []
    for i in range(m + 1):
        images.append(image_basis(c.boundary(i)))
    degrees = []
    for i in range(m + 1):
        n = c.dims[i]
        cycles = kernel_basis(c.boundary(i - 1))
        b_i, lifting_rows = images[i]
        x_i = len(b_i)
        y_i = len(cycles) - x_i
        # scan cycle vectors, keep those independent of b_i and one another
        reps: list[tuple] = []
        if y_i > 0:
            base = b_i.matrix()
            for v in cycles:
                candidate = list(reps) + [v]
                stacked = vstack(base, Matrix(ring, candidate, cols=n))
                if rank(stacked) == x_i + len(candidate):
                    reps.append(v)
                    if len(reps) == y_i:
                        break
        if len(reps) != y_i:
            raise AssertionError("homology representative scan came up short")
        if i == 0:
            prev_lift: list[tuple] = []
        else:
            prev_lift = _unit_rows(ring, n, images[i - 1][1])
        degrees.append(
            DegreeData(
                cycles=cycles,
                boundary_basis=b_i,
                lifting_rows=lifting_rows,
                boundary_lifting=RowBasis(ring, n, prev_lift, check=False),
                homology_reps=RowBasis(ring, n, reps, check=False),
                boundary_rank=x_i,
                betti=y_i,
            )
        )
    return HomologyData(c, tuple(degrees))


def is_acyclic(c: BasedChainComplex) -> bool:
    return all(y == 0 for y in homology_data(c).betti)


def direct_sum(c: BasedChainComplex, c2: BasedChainComplex) -> BasedChainComplex:
    """Degree-wise direct sum; basis order is all of c then all of c2."""
    if c.ring is not c2.ring:
        raise FieldMismatch(f"{c.ring.name} complex summed with {c2.ring.name}")
    m = common_length(c, c2)
    c = pad_complex(c, m)
    c2 = pad_complex(c2, m)
    dims = tuple(a + b for a, b in zip(c.dims, c2.dims))
    mats = tuple(
        block_diag(c.boundaries[i], c2.boundaries[i]) for i in range(m)
    )
    return BasedChainComplex(c.ring, dims, mats)


def dual_complex(c: BasedChainComplex) -> BasedChainComplex:
    """Degree-reversed complex of dual spaces with transposed boundaries."""
    validate_complex(c)
    m = c.length
    dims = tuple(c.dims[m - i] for i in range(m + 1))
    mats = tuple(c.boundary(m - i - 1).transpose() for i in range(m))
    return BasedChainComplex(c.ring, dims, mats)


def make_elementary(n: int, i: int, m: int, ring: Ring = QQ) -> BasedChainComplex:
    """Acyclic complex with identity boundary concentrated in degrees i, i+1."""
    if m < 1 or not 0 <= i <= m - 1:
        raise DegreeOutOfRange(f"degree {i} does not fit a length-{m} complex")
    if n < 0:
        raise DegreeOutOfRange("negative rank")
    dims = tuple(n if j in (i, i + 1) else 0 for j in range(m + 1))
    mats = []
    for j in range(m):
        if j == i:
            mats.append(Matrix.identity(ring, n))
        else:
            mats.append(Matrix.zeros(ring, dims[j + 1], dims[j]))
    return BasedChainComplex(ring, dims, tuple(mats))
