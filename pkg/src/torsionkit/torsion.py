"""Torsion of quasi-isomorphisms and of acyclic based complexes.

The torsion of a quasi-isomorphism f: C -> C' is an alternating product of
determinant brackets.  In each degree the numerator bracket stacks rows
(b_i, h_i, lifted b_{i-1}) over the source and the denominator stacks
(b'_i, f_i(h_i), lifted b'_{i-1}) over the target, where b is a basis of
the boundaries, h a set of homology representatives, and the liftings pull
a boundary basis back through the boundary map.  The value is exact and
independent of every internal choice, which torsion_with_bases exercises
directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain_maps import (
    ChainMap,
    induced_homology_maps,
    validate_chain_map,
)
from .complexes import BasedChainComplex, homology_data, is_acyclic
from .errors import (
    ComplexMismatch,
    InvalidBasisChoice,
    NoSolution,
    NotAcyclic,
    NotQuasiIsomorphism,
    NotSameSpan,
    NotSelfMap,
    Singular,
)
from .linalg import (
    Matrix,
    RowBasis,
    determinant,
    rank,
    row_times_matrix,
    solve_row,
    transition_matrix,
)


@dataclass
class BasisChoice:
    """Optional per-degree overrides for the free choices inside the torsion.

    Keys are degrees.  ``source_boundaries[i]`` / ``target_boundaries[i]``
    replace the canonical basis of the degree-i boundaries;
    ``homology_reps[i]`` replaces the source homology representatives;
    ``source_liftings[i]`` / ``target_liftings[i]`` are rows of degree i+1
    mapping onto the (possibly overridden) boundary basis of degree i.
    """

    source_boundaries: dict[int, list] = field(default_factory=dict)
    target_boundaries: dict[int, list] = field(default_factory=dict)
    homology_reps: dict[int, list] = field(default_factory=dict)
    source_liftings: dict[int, list] = field(default_factory=dict)
    target_liftings: dict[int, list] = field(default_factory=dict)


def _check_quasi_isomorphism(f: ChainMap) -> None:
    induced = induced_homology_maps(f)
    for i, mat in enumerate(induced.mats):
        if mat.rows != mat.cols or rank(mat) != mat.rows:
            raise NotQuasiIsomorphism(
                f"induced map in degree {i} is not invertible"
            )


def _resolved_side(c: BasedChainComplex, hdata, boundary_over, lifting_over):
    """Per-degree boundary bases and the degree-(i+1) rows lifting each one."""
    ring = c.ring
    m = c.length
    bases: list[tuple] = []
    for i in range(m + 1):
        canonical = hdata.degrees[i].boundary_basis
        if i in boundary_over:
            rows = [tuple(ring.coerce(x) for x in r) for r in boundary_over[i]]
            if len(rows) != len(canonical):
                raise InvalidBasisChoice(
                    f"degree {i}: expected {len(canonical)} boundary vectors"
                )
            if rows:
                try:
                    transition_matrix(
                        RowBasis(ring, c.dims[i], rows),
                        canonical,
                    )
                except (NotSameSpan, ValueError) as exc:
                    raise InvalidBasisChoice(
                        f"degree {i}: override does not span the boundaries"
                    ) from exc
            bases.append(tuple(rows))
        else:
            bases.append(canonical.vectors)
    # liftings[i] lifts bases[i]: rows of degree i+1 mapping onto it
    liftings: list[tuple] = []
    for i in range(m + 1):
        if i in lifting_over:
            rows = [tuple(ring.coerce(x) for x in r) for r in lifting_over[i]]
            if len(rows) != len(bases[i]):
                raise InvalidBasisChoice(
                    f"degree {i}: expected {len(bases[i])} lifting vectors"
                )
            d_i = c.boundary(i)
            for j, r in enumerate(rows):
                if row_times_matrix(r, d_i) != bases[i][j]:
                    raise InvalidBasisChoice(
                        f"degree {i}: lifting row {j} does not map onto the basis"
                    )
            liftings.append(tuple(rows))
        elif i in boundary_over:
            d_i = c.boundary(i)
            try:
                rows = [solve_row(d_i, b) for b in bases[i]]
            except NoSolution as exc:
                raise InvalidBasisChoice(
                    f"degree {i}: boundary override is not in the image"
                ) from exc
            liftings.append(tuple(rows))
        elif i < m:
            liftings.append(hdata.degrees[i + 1].boundary_lifting.vectors)
        else:
            liftings.append(())
    return bases, liftings


def _resolved_reps(c, hdata, reps_over, boundary_bases):
    ring = c.ring
    reps: list[tuple] = []
    for i in range(c.length + 1):
        canonical = hdata.degrees[i].homology_reps
        if i not in reps_over:
            reps.append(canonical.vectors)
            continue
        rows = [tuple(ring.coerce(x) for x in r) for r in reps_over[i]]
        if len(rows) != len(canonical):
            raise InvalidBasisChoice(
                f"degree {i}: expected {len(canonical)} homology representatives"
            )
        d_prev = c.boundary(i - 1)
        for j, r in enumerate(rows):
            if any(x != ring.zero for x in row_times_matrix(r, d_prev)):
                raise InvalidBasisChoice(
                    f"degree {i}: representative {j} is not a cycle"
                )
        stacked = list(boundary_bases[i]) + rows
        if stacked:
            if rank(Matrix(ring, stacked, cols=c.dims[i])) != len(stacked):
                raise InvalidBasisChoice(
                    f"degree {i}: representatives are dependent modulo boundaries"
                )
        reps.append(tuple(rows))
    return reps


def torsion_brackets(f: ChainMap, choice: BasisChoice | None = None):
    """Per-degree (numerator, denominator) bracket determinants for f."""
    validate_chain_map(f)
    _check_quasi_isomorphism(f)
    hs = homology_data(f.source)
    ht = homology_data(f.target)
    ring = f.source.ring
    if choice is None:
        choice = BasisChoice()
    src_bases, src_lifts = _resolved_side(
        f.source, hs, choice.source_boundaries, choice.source_liftings
    )
    tgt_bases, tgt_lifts = _resolved_side(
        f.target, ht, choice.target_boundaries, choice.target_liftings
    )
    reps = _resolved_reps(f.source, hs, choice.homology_reps, src_bases)
    out = []
    for i in range(f.length + 1):
        prev_src = src_lifts[i - 1] if i > 0 else ()
        prev_tgt = tgt_lifts[i - 1] if i > 0 else ()
        num_rows = list(src_bases[i]) + list(reps[i]) + list(prev_src)
        num = determinant(Matrix(ring, num_rows, cols=f.source.dims[i]))
        image_reps = [row_times_matrix(h, f.mats[i]) for h in reps[i]]
        den_rows = list(tgt_bases[i]) + image_reps + list(prev_tgt)
        den = determinant(Matrix(ring, den_rows, cols=f.target.dims[i]))
        out.append((num, den))
    return tuple(out)


def _alternate(ring, ratios):
    value = ring.one
    for i, r in enumerate(ratios):
        value = value / r if i % 2 == 0 else value * r
    return value


def torsion(f: ChainMap):
    """Torsion of a quasi-isomorphism, as an exact nonzero field element."""
    brackets = torsion_brackets(f)
    ring = f.source.ring
    return _alternate(ring, [num / den for num, den in brackets])


def torsion_with_bases(f: ChainMap, choice: BasisChoice):
    """Torsion evaluated with explicit basis and lifting choices.

    Equal to torsion(f) for every valid choice; the overrides are checked
    and InvalidBasisChoice is raised when one fails.
    """
    brackets = torsion_brackets(f, choice)
    ring = f.source.ring
    return _alternate(ring, [num / den for num, den in brackets])


def torsion_acyclic(c: BasedChainComplex):
    """Torsion of a based acyclic complex; the empty complex has torsion 1."""
    if not is_acyclic(c):
        raise NotAcyclic("complex has nonzero homology")
    hdata = homology_data(c)
    ring = c.ring
    ratios = [
        determinant(hdata.composite_basis(i)) for i in range(c.length + 1)
    ]
    return _alternate(ring, ratios)


def torsion_self_map(f: ChainMap):
    """Fast path for self-maps: alternating product of induced determinants."""
    if f.source != f.target:
        raise NotSelfMap("source and target differ")
    validate_chain_map(f)
    induced = induced_homology_maps(f)
    ring = f.source.ring
    value = ring.one
    for i, mat in enumerate(induced.mats):
        if mat.rows != mat.cols:
            raise NotQuasiIsomorphism(f"induced map in degree {i} is not square")
        d = determinant(mat)
        if d == ring.zero:
            raise NotQuasiIsomorphism(
                f"induced map in degree {i} is not invertible"
            )
        value = value * d if i % 2 == 0 else value / d
    return value


def base_change_factor(c_old, c_new):
    """Alternating determinant correction for re-basing a complex.

    Both arguments are per-degree square matrices whose rows express the
    old and new distinguished bases in one common coordinate system; the
    result multiplies the torsion computed in the old bases into the one
    computed in the new.
    """
    if len(c_old) != len(c_new):
        raise Singular("base-change lists of different lengths")
    value = None
    for i, (old, new) in enumerate(zip(c_old, c_new)):
        if old.rows != old.cols or new.rows != new.cols or old.shape != new.shape:
            raise Singular(f"degree {i}: base-change matrices must be square")
        ring = old.ring
        if value is None:
            value = ring.one
        d_old = determinant(old)
        d_new = determinant(new)
        if d_old == ring.zero or d_new == ring.zero:
            raise Singular(f"degree {i}: base-change matrix is singular")
        ratio = d_new / d_old
        value = value / ratio if i % 2 == 0 else value * ratio
    return value


def torsion_quotient(f: ChainMap, g: ChainMap):
    """tau(f)/tau(g) straight from the induced maps of two parallel quasi-isos."""
    if f.source != g.source or f.target != g.target:
        raise ComplexMismatch("quotient needs maps with the same source and target")
    validate_chain_map(f)
    validate_chain_map(g)
    fi = induced_homology_maps(f)
    gi = induced_homology_maps(g)
    ring = f.source.ring
    value = ring.one
    for i in range(f.length + 1):
        fm, gm = fi.mats[i], gi.mats[i]
        if fm.rows != fm.cols or gm.rows != gm.cols:
            raise NotQuasiIsomorphism(f"induced map in degree {i} is not square")
        df = determinant(fm)
        dg = determinant(gm)
        if df == ring.zero or dg == ring.zero:
            raise NotQuasiIsomorphism(
                f"induced map in degree {i} is not invertible"
            )
        ratio = dg / df
        value = value / ratio if i % 2 == 0 else value * ratio
    return value


@dataclass(frozen=True)
class DimensionProfile:
    """Boundary ranks x_i and Betti numbers y_i of one complex."""

    boundary_ranks: tuple[int, ...]
    betti: tuple[int, ...]

    def x(self, i: int) -> int:
        if i < 0 or i >= len(self.boundary_ranks):
            return 0
        return self.boundary_ranks[i]

    def y(self, i: int) -> int:
        if i < 0 or i >= len(self.betti):
            return 0
        return self.betti[i]


def dimension_profile(c: BasedChainComplex) -> DimensionProfile:
    hdata = homology_data(c)
    return DimensionProfile(hdata.boundary_ranks, hdata.betti)


def predict_sum_sign_from_profiles(
    p: DimensionProfile,
    p1: DimensionProfile,
    p2: DimensionProfile,
    p3: DimensionProfile,
    length: int,
) -> int:
    """Sign s with tau(f + g) = s * tau(f) * tau(g) for f: C->C', g: C''->C'''.

    p, p1, p2, p3 are the profiles of C, C', C'', C'''.  The exponent counts
    the row transpositions needed to interleave the two summands' bracket
    rows into the direct-sum order, numerator minus denominator.
    """
    exponent = 0
    for i in range(length + 1):
        num = p2.x(i) * p.y(i) + p.x(i - 1) * (p2.x(i) + p2.y(i))
        den = p3.x(i) * p.y(i) + p1.x(i - 1) * (p3.x(i) + p2.y(i))
        exponent += num - den
    return 1 if exponent % 2 == 0 else -1


def predict_sum_sign(f: ChainMap, g: ChainMap) -> int:
    length = max(f.length, g.length)
    return predict_sum_sign_from_profiles(
        dimension_profile(f.source),
        dimension_profile(f.target),
        dimension_profile(g.source),
        dimension_profile(g.target),
        length,
    )


def predict_dual_sign_from_profiles(
    p: DimensionProfile, p1: DimensionProfile, length: int
) -> int:
    """Sign s with tau(dual f) = s * tau(f)^((-1)^m) for f: C -> C'."""
    exponent = 0
    for i in range(length + 1):
        num = p1.x(i) * (p1.x(i - 1) + p.y(i)) + p1.x(i - 1) * p.y(i)
        den = p.x(i) * (p.x(i - 1) + p.y(i)) + p.x(i - 1) * p.y(i)
        exponent += num - den
    return 1 if exponent % 2 == 0 else -1


def predict_dual_sign(f: ChainMap) -> int:
    return predict_dual_sign_from_profiles(
        dimension_profile(f.source), dimension_profile(f.target), f.length
    )
