"""Free chain complexes over Q[t]: Smith normal form, homology orders,
and torsion after tensoring with Q(t).

Q[t] is Euclidean, so every polynomial matrix has a Smith normal form
U A V = D with U, V invertible over Q[t] (their determinants are nonzero
rationals) and monic diagonal entries forming a divisibility chain.  The
order of a rank-zero homology module is the product of the invariant
factors of a presentation matrix, and the torsion of the tensored complex
equals the alternating product of those orders up to a nonzero rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chain_maps import ChainMap, make_chain_map, validate_chain_map
from .complexes import BasedChainComplex, make_complex, validate_complex
from .errors import (
    NotQuasiIsomorphismAfterTensor,
    PositiveRankHomology,
)
from .fields import QPOLY, QT, Polynomial, RationalFunction
from .linalg import Matrix
from .torsion import _check_quasi_isomorphism, torsion


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V = D with unimodular U, V and a monic divisibility chain."""

    u: Matrix
    d: Matrix
    v: Matrix
    u_inv: Matrix
    v_inv: Matrix

    @property
    def invariant_factors(self) -> tuple[Polynomial, ...]:
        n = min(self.d.rows, self.d.cols)
        out = []
        for k in range(n):
            e = self.d[k, k]
            if e.is_zero:
                break
            out.append(e)
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _grid(m: Matrix) -> list[list[Polynomial]]:
    return [list(row) for row in m.entries]


def _identity_grid(n: int) -> list[list[Polynomial]]:
    one, zero = QPOLY.one, QPOLY.zero
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _content_scale(polys) -> Fraction | None:
    """Rational unit that clears denominators and divides out the integer gcd.

    Rescaling rows and columns of the work matrix by such units keeps the
    division quotients small; without it the transform coefficients blow up
    exponentially on dense inputs.
    """
    den_lcm = 1
    num_gcd = 0
    for p in polys:
        for c in p.coeffs:
            if c == 0:
                continue
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    for p in polys:
        for c in p.coeffs:
            if c == 0:
                continue
            num_gcd = math.gcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
    if num_gcd == 0:
        return None
    scale = Fraction(den_lcm, num_gcd)
    return None if scale == 1 else scale


def smith_normal_form(a: Matrix) -> SmithDecomposition:
    """Deterministic Smith normal form of a polynomial matrix."""
    if a.ring is not QPOLY:
        raise TypeError("Smith normal form works on Q[t] matrices")
    r, c = a.rows, a.cols
    d = _grid(a)
    u, u_inv = _identity_grid(r), _identity_grid(r)
    v, v_inv = _identity_grid(c), _identity_grid(c)

    def row_sub(i, k, q):
        # D[i] -= q*D[k]; track U and its inverse (column op on the inverse)
        d[i] = [x - q * y for x, y in zip(d[i], d[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]
        for t in range(r):
            u_inv[t][k] = u_inv[t][k] + q * u_inv[t][i]

    def col_sub(j, k, q):
        for t in range(r):
            d[t][j] = d[t][j] - q * d[t][k]
        for t in range(c):
            v[t][j] = v[t][j] - q * v[t][k]
        v_inv[k] = [x + q * y for x, y in zip(v_inv[k], v_inv[j])]

    def row_swap(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]
        for t in range(r):
            u_inv[t][i], u_inv[t][k] = u_inv[t][k], u_inv[t][i]

    def col_swap(j, k):
        for t in range(r):
            d[t][j], d[t][k] = d[t][k], d[t][j]
        for t in range(c):
            v[t][j], v[t][k] = v[t][k], v[t][j]
        v_inv[j], v_inv[k] = v_inv[k], v_inv[j]

    def row_add(i, k):
        d[i] = [x + y for x, y in zip(d[i], d[k])]
        u[i] = [x + y for x, y in zip(u[i], u[k])]
        for t in range(r):
            u_inv[t][k] = u_inv[t][k] - u_inv[t][i]

    def row_scale(i, s):
        d[i] = [s * x for x in d[i]]
        u[i] = [s * x for x in u[i]]
        inv = 1 / s
        for t in range(r):
            u_inv[t][i] = inv * u_inv[t][i]

    def col_scale(j, s):
        for t in range(r):
            d[t][j] = s * d[t][j]
        for t in range(c):
            v[t][j] = s * v[t][j]
        inv = 1 / s
        v_inv[j] = [inv * x for x in v_inv[j]]

    def tidy_row(i):
        s = _content_scale(d[i])
        if s is not None:
            row_scale(i, s)

    def tidy_col(j):
        s = _content_scale([d[t][j] for t in range(r)])
        if s is not None:
            col_scale(j, s)

    def entry_weight(p):
        return (p.degree, max(abs(x) for x in p.coeffs))

    def min_degree_position(k):
        best = None
        best_key = None
        for i in range(k, r):
            for j in range(k, c):
                if not d[i][j].is_zero:
                    key = entry_weight(d[i][j])
                    if best is None or key < best_key:
                        best, best_key = (i, j), key
        return best

    def reduce_row_entry(i, k):
        q, _ = divmod(d[i][k], d[k][k])
        row_sub(i, k, q)
        tidy_row(i)

    def reduce_col_entry(j, k):
        q, _ = divmod(d[k][j], d[k][k])
        col_sub(j, k, q)
        tidy_col(j)

    for i in range(r):
        tidy_row(i)
    k = 0
    while k < min(r, c):
        pos = min_degree_position(k)
        if pos is None:
            break
        if pos[0] != k:
            row_swap(k, pos[0])
        if pos[1] != k:
            col_swap(k, pos[1])
        while True:
            # a monic pivot keeps every division quotient small, which is
            # what stops the transform matrices from blowing up
            if d[k][k].leading != 1:
                row_scale(k, 1 / d[k][k].leading)
            dirty = False
            for i in range(k + 1, r):
                if d[i][k].is_zero:
                    continue
                reduce_row_entry(i, k)
                if not d[i][k].is_zero:
                    row_swap(i, k)
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(k + 1, c):
                if d[k][j].is_zero:
                    continue
                reduce_col_entry(j, k)
                if not d[k][j].is_zero:
                    col_swap(j, k)
                    dirty = True
                    break
            if dirty:
                continue
            bad = None
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if not (d[i][j] % d[k][k]).is_zero:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(k, bad)
            tidy_row(k)
        lead = d[k][k].leading
        if lead != 1:
            row_scale(k, 1 / lead)
        k += 1

    return SmithDecomposition(
        u=Matrix(QPOLY, u, cols=r),
        d=Matrix(QPOLY, d, cols=c),
        v=Matrix(QPOLY, v, cols=c),
        u_inv=Matrix(QPOLY, u_inv, cols=r),
        v_inv=Matrix(QPOLY, v_inv, cols=c),
    )


def tensor_to_fractions(c: BasedChainComplex) -> BasedChainComplex:
    """Reinterpret a Q[t] complex over Q(t), keeping the same matrices."""
    if c.ring is not QPOLY:
        raise TypeError("tensor_to_fractions expects a Q[t] complex")
    mats = tuple(
        Matrix(QT, [[RationalFunction(x) for x in row] for row in b.entries], cols=b.cols)
        for b in c.boundaries
    )
    return BasedChainComplex(QT, c.dims, mats)


def tensor_map(f: ChainMap) -> ChainMap:
    """Reinterpret a Q[t] chain map over Q(t)."""
    if f.source.ring is not QPOLY:
        raise TypeError("tensor_map expects a Q[t] chain map")
    mats = tuple(
        Matrix(QT, [[RationalFunction(x) for x in row] for row in m.entries], cols=m.cols)
        for m in f.mats
    )
    return ChainMap(
        tensor_to_fractions(f.source), tensor_to_fractions(f.target), mats
    )


def make_poly_complex(dims, boundaries) -> BasedChainComplex:
    return make_complex(QPOLY, dims, boundaries)


def make_poly_chain_map(source, target, mats) -> ChainMap:
    return make_chain_map(source, target, mats)


def _kernel_data(a: Matrix) -> tuple[SmithDecomposition, int]:
    """SNF of a boundary together with the rank of its left kernel."""
    snf = smith_normal_form(a)
    return snf, a.rows - snf.rank


def order_of_homology(c: BasedChainComplex, i: int) -> Polynomial:
    """Monic generator of the order ideal of H_i, for rank-zero homology.

    The kernel of the incoming boundary is saturated via the Smith form of
    that boundary (the trailing rows of U are a Q[t]-basis).  Expressing the
    rows of the outgoing boundary in that basis gives a presentation of
    H_i, whose invariant factors multiply to the order.
    """
    validate_complex(c)
    if c.ring is not QPOLY:
        raise TypeError("order_of_homology expects a Q[t] complex")
    if not 0 <= i <= c.length:
        raise PositiveRankHomology(f"degree {i} outside the complex")
    snf_in, zrank = _kernel_data(c.boundary(i - 1))
    if zrank == 0:
        return QPOLY.one
    # coordinates of the boundary generators in the kernel basis
    coords = c.boundary(i) @ snf_in.u_inv
    head = snf_in.rank
    for row in coords.entries:
        for x in row[:head]:
            if not x.is_zero:
                raise AssertionError("boundary row escaped the cycle module")
    pres = Matrix(QPOLY, [row[head:] for row in coords.entries], cols=zrank)
    snf_pres = smith_normal_form(pres)
    if snf_pres.rank < zrank:
        raise PositiveRankHomology(
            f"H_{i} has positive rank over Q(t); its order would be zero"
        )
    order = QPOLY.one
    for e in snf_pres.invariant_factors:
        order = order * e
    return order.monic()


def homology_orders(c: BasedChainComplex) -> tuple[Polynomial, ...]:
    return tuple(order_of_homology(c, i) for i in range(c.length + 1))


def turaev_torsion(c: BasedChainComplex) -> RationalFunction:
    """Alternating product of the homology orders of a rank-zero complex.

    Matches the torsion of the tensored complex up to a nonzero rational
    factor (the based torsion depends on bases only through units here).
    """
    orders = homology_orders(c)
    value = QT.one
    for i, p in enumerate(orders):
        q = RationalFunction(p)
        value = value / q if i % 2 == 0 else value * q
    return value


def torsion_over_ufd(f: ChainMap) -> RationalFunction:
    """Torsion of a Q[t] chain map, defined through the tensored map."""
    validate_chain_map(f)
    ft = tensor_map(f)
    try:
        _check_quasi_isomorphism(ft)
    except Exception as exc:
        raise NotQuasiIsomorphismAfterTensor(
            "map is not a quasi-isomorphism after tensoring with Q(t)"
        ) from exc
    return torsion(ft)
