"""Chain maps between based complexes and their induced maps on homology."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ComplexMismatch,
    FieldMismatch,
    NotChainMap,
    ShapeMismatch,
)
from .complexes import (
    BasedChainComplex,
    common_length,
    direct_sum,
    dual_complex,
    homology_data,
    pad_complex,
    validate_complex,
)
from .linalg import Matrix, block_diag, hstack, rank, row_times_matrix, solve_row, vstack


@dataclass(frozen=True)
class ChainMap:
    source: BasedChainComplex
    target: BasedChainComplex
    mats: tuple[Matrix, ...]  # f_i of shape n_i(source) x n_i(target)

    @property
    def length(self) -> int:
        return self.source.length


def make_chain_map(source, target, mats) -> ChainMap:
    """Build and validate a chain map, padding to a common length first."""
    if source.ring is not target.ring:
        raise FieldMismatch(
            f"map from a {source.ring.name} complex to a {target.ring.name} complex"
        )
    m = common_length(source, target)
    source = pad_complex(source, m)
    target = pad_complex(target, m)
    ring = source.ring
    mats = list(mats)
    ms = [
        f if isinstance(f, Matrix) else Matrix(ring, f, cols=target.dims[i])
        for i, f in enumerate(mats)
    ]
    while len(ms) <= m:
        i = len(ms)
        ms.append(Matrix.zeros(ring, source.dims[i], target.dims[i]))
    f = ChainMap(source, target, tuple(ms))
    validate_chain_map(f)
    return f


def validate_chain_map(f: ChainMap) -> None:
    """Check shapes and the commuting squares f_i d'_{i-1} = d_{i-1} f_{i-1}."""
    validate_complex(f.source)
    validate_complex(f.target)
    if f.source.ring is not f.target.ring:
        raise FieldMismatch("source and target over different fields")
    m = f.source.length
    if f.target.length != m:
        raise ShapeMismatch("source and target of different lengths")
    if len(f.mats) != m + 1:
        raise ShapeMismatch(f"expected {m + 1} matrices, found {len(f.mats)}")
    for i, mat in enumerate(f.mats):
        if mat.ring is not f.source.ring:
            raise FieldMismatch(f"degree {i} matrix over {mat.ring.name}")
        if mat.shape != (f.source.dims[i], f.target.dims[i]):
            raise ShapeMismatch(
                f"degree {i} matrix has shape {mat.shape}, expected "
                f"({f.source.dims[i]}, {f.target.dims[i]})"
            )
    for i in range(1, m + 1):
        lhs = f.mats[i] @ f.target.boundary(i - 1)
        rhs = f.source.boundary(i - 1) @ f.mats[i - 1]
        if lhs != rhs:
            raise NotChainMap(i)


def identity_map(c: BasedChainComplex) -> ChainMap:
    mats = tuple(Matrix.identity(c.ring, n) for n in c.dims)
    return ChainMap(c, c, mats)


def zero_map(source: BasedChainComplex, target: BasedChainComplex) -> ChainMap:
    m = common_length(source, target)
    source = pad_complex(source, m)
    target = pad_complex(target, m)
    mats = tuple(
        Matrix.zeros(source.ring, source.dims[i], target.dims[i])
        for i in range(m + 1)
    )
    return ChainMap(source, target, mats)


@dataclass(frozen=True)
class InducedMaps:
    """Per-degree matrices of the map induced on homology, in the canonical bases."""

    mats: tuple[Matrix, ...]

    def __getitem__(self, i: int) -> Matrix:
        return self.mats[i]

    def __len__(self) -> int:
        return len(self.mats)


def induced_homology_maps(f: ChainMap) -> InducedMaps:
    """Row j of degree i is the class of f_i(h_i[j]) in the target's h-basis."""
    hs = homology_data(f.source)
    ht = homology_data(f.target)
    ring = f.source.ring
    out = []
    for i in range(f.length + 1):
        src = hs.degrees[i]
        tgt = ht.degrees[i]
        y_t = tgt.betti
        # coordinates modulo boundaries: solve against (h'_i rows, b'_i rows)
        solver = vstack(tgt.homology_reps.matrix(), tgt.boundary_basis.matrix())
        rows = []
        for v in src.homology_reps:
            w = row_times_matrix(v, f.mats[i])
            x = solve_row(solver, w)
            rows.append(x[:y_t])
        out.append(Matrix(ring, rows, cols=y_t))
    return InducedMaps(tuple(out))


def is_quasi_isomorphism(f: ChainMap) -> bool:
    """True when every induced homology matrix is square and invertible."""
    induced = induced_homology_maps(f)
    for mat in induced.mats:
        if mat.rows != mat.cols or rank(mat) != mat.rows:
            return False
    return True


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f; matrices multiply in application order f_i @ g_i."""
    if f.target != g.source:
        raise ComplexMismatch("target of f is not the source of g")
    mats = tuple(f.mats[i] @ g.mats[i] for i in range(f.length + 1))
    return ChainMap(f.source, g.target, mats)


def direct_sum_map(f: ChainMap, g: ChainMap) -> ChainMap:
    if f.source.ring is not g.source.ring:
        raise FieldMismatch("direct sum of maps over different fields")
    m = max(f.length, g.length)
    f = pad_map(f, m)
    g = pad_map(g, m)
    source = direct_sum(f.source, g.source)
    target = direct_sum(f.target, g.target)
    mats = tuple(block_diag(f.mats[i], g.mats[i]) for i in range(m + 1))
    return ChainMap(source, target, mats)


def pad_map(f: ChainMap, length: int) -> ChainMap:
    if length == f.length:
        return f
    source = pad_complex(f.source, length)
    target = pad_complex(f.target, length)
    mats = list(f.mats)
    for i in range(f.length + 1, length + 1):
        mats.append(Matrix.zeros(source.ring, source.dims[i], target.dims[i]))
    return ChainMap(source, target, tuple(mats))


def dual_map(f: ChainMap) -> ChainMap:
    """The dual chain map: degree i matrix is the transpose of f_{m-i}."""
    m = f.length
    source = dual_complex(f.target)
    target = dual_complex(f.source)
    mats = tuple(f.mats[m - i].transpose() for i in range(m + 1))
    return ChainMap(source, target, mats)


@dataclass(frozen=True)
class ChainHomotopy:
    """Degree-raising maps T_i: C_i -> C'_{i+1}; missing degrees are zero."""

    mats: tuple[Matrix, ...]  # T_0 .. T_{m-1}

    def __getitem__(self, i: int) -> Matrix:
        return self.mats[i]


def make_homotopy(source, target, mats) -> ChainHomotopy:
    m = common_length(source, target)
    source = pad_complex(source, m)
    target = pad_complex(target, m)
    ring = source.ring
    ms = [
        t if isinstance(t, Matrix) else Matrix(ring, t, cols=target.dims[i + 1])
        for i, t in enumerate(mats)
    ]
    while len(ms) < m:
        i = len(ms)
        ms.append(Matrix.zeros(ring, source.dims[i], target.dims[i + 1]))
    for i, t in enumerate(ms):
        if t.shape != (source.dims[i], target.dims[i + 1]):
            raise ShapeMismatch(
                f"homotopy matrix {i} has shape {t.shape}, expected "
                f"({source.dims[i]}, {target.dims[i + 1]})"
            )
    return ChainHomotopy(tuple(ms))


def homotopy_displacement(f: ChainMap, t: ChainHomotopy) -> tuple[Matrix, ...]:
    """The chain map d'T + Td built from T between f's source and target."""
    src, tgt = f.source, f.target
    m = f.length
    out = []
    for i in range(m + 1):
        acc = Matrix.zeros(src.ring, src.dims[i], tgt.dims[i])
        if i < m:
            acc = acc + t.mats[i] @ tgt.boundary(i)
        if i > 0:
            acc = acc + src.boundary(i - 1) @ t.mats[i - 1]
        out.append(acc)
    return tuple(out)


def check_homotopy(f: ChainMap, g: ChainMap, t: ChainHomotopy) -> bool:
    """True when f_i - g_i = d'_i T_i + T_{i-1} d_{i-1} in every degree."""
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("homotopy between maps with different endpoints")
    disp = homotopy_displacement(f, t)
    return all(
        f.mats[i] - g.mats[i] == disp[i] for i in range(f.length + 1)
    )


def triangular_extension(f: ChainMap, f2: ChainMap, g: ChainMap) -> ChainMap:
    """Self-map on C + C2 sending (x, y) to (f(x), g(x) + f2(y)).

    f and f2 are self-maps on C and C2; g: C -> C2 is any chain map.  The
    blocks are [[f_i, g_i], [0, f2_i]] in the row convention.
    """
    if f.source != f.target or f2.source != f2.target:
        raise ComplexMismatch("triangular extension needs two self-maps")
    if g.source != f.source or g.target != f2.source:
        raise ComplexMismatch("connecting map must go from the first complex to the second")
    validate_chain_map(g)
    c, c2 = f.source, f2.source
    total = direct_sum(c, c2)
    ring = c.ring
    mats = []
    for i in range(f.length + 1):
        top = hstack(f.mats[i], g.mats[i])
        bottom = hstack(
            Matrix.zeros(ring, c2.dims[i], c.dims[i]), f2.mats[i]
        )
        mats.append(vstack(top, bottom))
    out = ChainMap(total, total, tuple(mats))
    validate_chain_map(out)
    return out


def make_injection(c: BasedChainComplex, c2: BasedChainComplex) -> ChainMap:
    """The injection C -> C + C2 with blocks [I | 0]."""
    m = common_length(c, c2)
    c = pad_complex(c, m)
    c2 = pad_complex(c2, m)
    total = direct_sum(c, c2)
    ring = c.ring
    mats = tuple(
        hstack(Matrix.identity(ring, c.dims[i]), Matrix.zeros(ring, c.dims[i], c2.dims[i]))
        for i in range(m + 1)
    )
    return ChainMap(c, total, mats)


def make_projection(c: BasedChainComplex, c2: BasedChainComplex) -> ChainMap:
    """The projection C + C2 -> C with blocks [I / 0]."""
    m = common_length(c, c2)
    c = pad_complex(c, m)
    c2 = pad_complex(c2, m)
    total = direct_sum(c, c2)
    ring = c.ring
    mats = tuple(
        vstack(Matrix.identity(ring, c.dims[i]), Matrix.zeros(ring, c2.dims[i], c.dims[i]))
        for i in range(m + 1)
    )
    return ChainMap(total, c, mats)


def is_chain_isomorphism(f: ChainMap) -> bool:
    return all(
        mat.rows == mat.cols and rank(mat) == mat.rows for mat in f.mats
    )


def inverse_chain_map(f: ChainMap) -> ChainMap:
    from .linalg import matrix_inverse

    mats = tuple(matrix_inverse(mat) for mat in f.mats)
    return ChainMap(f.target, f.source, mats)


__all__ = [
    "ChainHomotopy",
    "ChainMap",
    "InducedMaps",
    "check_homotopy",
    "compose",
    "direct_sum_map",
    "dual_map",
    "homotopy_displacement",
    "identity_map",
    "induced_homology_maps",
    "inverse_chain_map",
    "is_chain_isomorphism",
    "is_quasi_isomorphism",
    "make_chain_map",
    "make_homotopy",
    "make_injection",
    "make_projection",
    "pad_map",
    "triangular_extension",
    "validate_chain_map",
    "zero_map",
]
