"""Seeded random instances for the property suites and the CLI gen command.

Every generated map is a quasi-isomorphism by construction: compositions
of degree-wise invertible base changes, injections against elementary
acyclic complements, triangular extensions with a random connecting map,
and additions of null-homotopic maps (which never change the induced
maps).  The same seed always reproduces the same instance.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .chain_maps import (
    ChainMap,
    compose,
    homotopy_displacement,
    identity_map,
    inverse_chain_map,
    make_homotopy,
    make_injection,
    triangular_extension,
    zero_map,
)
from .complexes import (
    BasedChainComplex,
    direct_sum,
    make_elementary,
    zero_complex,
)
from .errors import ParamOutOfRange
from .fields import QPOLY, QQ, QT, Polynomial, RationalFunction, Ring
from .linalg import Matrix, matrix_inverse

MAX_LENGTH = 6
MAX_DIM = 8


def _check_params(m: int, max_dim: int) -> None:
    if not 0 <= m <= MAX_LENGTH:
        raise ParamOutOfRange(f"length m must be in 0..{MAX_LENGTH}, got {m}")
    if not 1 <= max_dim <= MAX_DIM:
        raise ParamOutOfRange(f"max_dim must be in 1..{MAX_DIM}, got {max_dim}")


class InstanceGenerator:
    """Deterministic source of complexes, quasi-isomorphisms, and witnesses."""

    def __init__(self, seed: int, ring: Ring = QQ):
        self.rng = random.Random(seed)
        self.ring = ring
        if ring is QQ:
            self._units = [Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(3)]
            self._addends = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2)]
            self._scalars = [Fraction(0), Fraction(0), Fraction(1), Fraction(-1), Fraction(2)]
        elif ring is QT:
            t = RationalFunction.t()
            one = QT.one
            self._units = [-one, 2 * one, t, Fraction(1, 2) * one]
            self._addends = [one, -one, t, 2 * one, t - 1]
            self._scalars = [QT.zero, QT.zero, one, -one, t]
        else:
            raise ParamOutOfRange(f"generator fields are Q and Q(t), not {ring.name}")

    # --- scalars and matrices ---

    def random_invertible(self, n: int, ops: int | None = None) -> Matrix:
        """Product of elementary row operations; always invertible."""
        ring = self.ring
        rows = [
            [ring.one if i == j else ring.zero for j in range(n)] for i in range(n)
        ]
        if n == 0:
            return Matrix(ring, rows, cols=0)
        if ops is None:
            ops = n + self.rng.randrange(2)
        for _ in range(ops):
            kind = self.rng.randrange(4)
            if kind == 0 and n >= 2:
                i, j = self.rng.sample(range(n), 2)
                rows[i], rows[j] = rows[j], rows[i]
            elif kind == 1:
                i = self.rng.randrange(n)
                u = self.rng.choice(self._units)
                rows[i] = [u * x for x in rows[i]]
            elif n >= 2:
                i, j = self.rng.sample(range(n), 2)
                lam = self.rng.choice(self._addends)
                rows[i] = [x + lam * y for x, y in zip(rows[i], rows[j])]
        return Matrix(ring, rows, cols=n)

    def random_matrix(self, rows: int, cols: int) -> Matrix:
        return Matrix(
            self.ring,
            [
                [self.rng.choice(self._scalars) for _ in range(cols)]
                for _ in range(rows)
            ],
            cols=cols,
        )

    # --- complexes ---

    def _profile(self, m: int, max_dim: int, acyclic: bool = False):
        x = []
        y = []
        prev_x = 0
        for i in range(m + 1):
            if i < m:
                cap = max(0, max_dim - prev_x)
                xi = self.rng.randint(0, min(2, cap))
            else:
                xi = 0
            cap = max(0, max_dim - xi - prev_x)
            yi = 0 if acyclic else self.rng.randint(0, min(2, cap))
            x.append(xi)
            y.append(yi)
            prev_x = xi
        return x, y

    def _normal_form(self, x: list[int], y: list[int]) -> BasedChainComplex:
        """Block complex with the requested boundary ranks and Betti numbers.

        The basis of degree i is ordered (boundary part, homology part,
        lifting part); the boundary sends the lifting part of degree i+1
        to the boundary part of degree i and kills the rest.
        """
        ring = self.ring
        m = len(y) - 1
        dims = [x[i] + y[i] + (x[i - 1] if i > 0 else 0) for i in range(m + 1)]
        mats = []
        for i in range(m):
            rows = []
            head = x[i + 1] + y[i + 1]
            for r in range(dims[i + 1]):
                row = [ring.zero] * dims[i]
                if r >= head:
                    row[r - head] = ring.one
                rows.append(row)
            mats.append(Matrix(ring, rows, cols=dims[i]))
        return BasedChainComplex(ring, tuple(dims), tuple(mats))

    def rebase(self, c: BasedChainComplex) -> ChainMap:
        """Chain isomorphism from c onto a randomly re-based copy."""
        mats = [self.random_invertible(n) for n in c.dims]
        inverses = [matrix_inverse(q) for q in mats]
        boundaries = tuple(
            inverses[i + 1] @ c.boundaries[i] @ mats[i] for i in range(c.length)
        )
        target = BasedChainComplex(c.ring, c.dims, boundaries)
        return ChainMap(c, target, tuple(mats))

    def random_complex(self, m: int, max_dim: int, acyclic: bool = False) -> BasedChainComplex:
        _check_params(m, max_dim)
        x, y = self._profile(m, max_dim, acyclic=acyclic)
        base = self._normal_form(x, y)
        return self.rebase(base).target

    def random_acyclic(self, m: int, max_dim: int) -> BasedChainComplex:
        return self.random_complex(m, max_dim, acyclic=True)

    def random_elementary_sum(self, m: int, max_rank: int = 2) -> BasedChainComplex:
        out = zero_complex(self.ring, m)
        if m == 0:
            return out
        blocks = self.rng.randint(1, 2)
        for _ in range(blocks):
            n = self.rng.randint(1, max_rank)
            i = self.rng.randrange(m)
            out = direct_sum(out, make_elementary(n, i, m, ring=self.ring))
        return out

    # --- chain maps ---

    def random_homotopy(self, f: ChainMap):
        mats = [
            self.random_matrix(f.source.dims[i], f.target.dims[i + 1])
            for i in range(f.length)
        ]
        return make_homotopy(f.source, f.target, mats)

    def null_homotopic_map(self, source, target) -> ChainMap:
        """A chain map homotopic to zero: dT + Td for random T."""
        z = zero_map(source, target)
        t = self.random_homotopy(z)
        return ChainMap(z.source, z.target, homotopy_displacement(z, t))

    def perturb(self, f: ChainMap) -> ChainMap:
        """Add a null-homotopic map; the induced maps do not move."""
        g = self.null_homotopic_map(f.source, f.target)
        mats = tuple(a + b for a, b in zip(f.mats, g.mats))
        return ChainMap(f.source, f.target, mats)

    def quasi_iso_from(self, c: BasedChainComplex, steps: int = 2) -> ChainMap:
        """Quasi-isomorphism out of c: base changes, stabilizations, perturbations."""
        f = identity_map(c)
        for _ in range(steps):
            op = self.rng.randrange(3)
            if op == 0:
                f = compose(self.rebase(f.target), f)
            elif op == 1 and f.target.length >= 1:
                e = self.random_elementary_sum(f.target.length)
                f = compose(make_injection(f.target, e), f)
            else:
                f = self.perturb(f)
        return f

    def random_quasi_iso(self, m: int, max_dim: int, steps: int = 2) -> ChainMap:
        _check_params(m, max_dim)
        return self.quasi_iso_from(self.random_complex(m, max_dim), steps)

    def composable_pair(self, m: int, max_dim: int) -> tuple[ChainMap, ChainMap]:
        f = self.random_quasi_iso(m, max_dim)
        g = self.quasi_iso_from(f.target, steps=2)
        return f, g

    def _atom(self, m: int, max_dim: int):
        """Small complex plus a maker of fresh invertible chain self-maps on it."""
        if self.rng.randrange(2) == 0 and m >= 1:
            n = self.rng.randint(1, max(1, max_dim // 2))
            i = self.rng.randrange(m)
            c = make_elementary(n, i, m, ring=self.ring)

            def make() -> ChainMap:
                a = self.random_invertible(n)
                mats = [
                    a
                    if j in (i, i + 1)
                    else Matrix.zeros(self.ring, c.dims[j], c.dims[j])
                    for j in range(m + 1)
                ]
                return ChainMap(c, c, tuple(mats))

            return c, make
        dims = [self.rng.randint(0, max(1, max_dim // 2)) for _ in range(m + 1)]
        if all(n == 0 for n in dims):
            dims[self.rng.randrange(m + 1)] = 1
        c = BasedChainComplex(
            self.ring,
            tuple(dims),
            tuple(Matrix.zeros(self.ring, dims[i + 1], dims[i]) for i in range(m)),
        )

        def make() -> ChainMap:
            return ChainMap(c, c, tuple(self.random_invertible(n) for n in dims))

        return c, make

    def _atomic_self_map(self, m: int, max_dim: int) -> ChainMap:
        _, make = self._atom(m, max_dim)
        return make()

    def random_self_quasi_iso(self, m: int, max_dim: int) -> ChainMap:
        """Self quasi-isomorphism built from a triangular extension, conjugated."""
        _check_params(m, max_dim)
        f1 = self._atomic_self_map(m, max_dim)
        f2 = self._atomic_self_map(m, max_dim)
        g = self.null_homotopic_map(f1.source, f2.source)
        f = triangular_extension(f1, f2, g)
        h = self.rebase(f.source)
        h_inv = inverse_chain_map(h)
        f = compose(h, compose(f, h_inv))
        if self.rng.randrange(2) == 0:
            f = self.perturb(f)
        return f

    def self_map_pair(self, m: int, max_dim: int) -> tuple[ChainMap, ChainMap]:
        """Two self quasi-isomorphisms on one complex; the second is a chain iso."""
        _check_params(m, max_dim)
        c1, mk1 = self._atom(m, max_dim)
        c2, mk2 = self._atom(m, max_dim)
        f = triangular_extension(mk1(), mk2(), self.null_homotopic_map(c1, c2))
        h = triangular_extension(mk1(), mk2(), self.null_homotopic_map(c1, c2))
        reb = self.rebase(f.source)
        reb_inv = inverse_chain_map(reb)
        f = compose(reb, compose(f, reb_inv))
        h = compose(reb, compose(h, reb_inv))
        if self.rng.randrange(2) == 0:
            f = self.perturb(f)
        return f, h

    def rebase_map(self, f: ChainMap):
        """Re-based copy of f plus the per-side base-change matrices."""
        qs = [self.random_invertible(n) for n in f.source.dims]
        rs = [self.random_invertible(n) for n in f.target.dims]
        q_inv = [matrix_inverse(q) for q in qs]
        r_inv = [matrix_inverse(r) for r in rs]
        src = BasedChainComplex(
            f.source.ring,
            f.source.dims,
            tuple(
                qs[i + 1] @ f.source.boundaries[i] @ q_inv[i]
                for i in range(f.length)
            ),
        )
        tgt = BasedChainComplex(
            f.target.ring,
            f.target.dims,
            tuple(
                rs[i + 1] @ f.target.boundaries[i] @ r_inv[i]
                for i in range(f.length)
            ),
        )
        mats = tuple(qs[i] @ f.mats[i] @ r_inv[i] for i in range(f.length + 1))
        return ChainMap(src, tgt, mats), qs, rs

    def random_basis_choice(self, f: ChainMap):
        """Valid random overrides for every free choice in the torsion of f."""
        from .complexes import homology_data
        from .linalg import kernel_basis, solve_row
        from .torsion import BasisChoice

        choice = BasisChoice()
        sides = (
            (f.source, homology_data(f.source), choice.source_boundaries,
             choice.source_liftings),
            (f.target, homology_data(f.target), choice.target_boundaries,
             choice.target_liftings),
        )
        for c, hd, bdict, ldict in sides:
            for i in range(c.length + 1):
                d = hd.degrees[i]
                x = d.boundary_rank
                if x == 0 or self.rng.randrange(2) == 0:
                    continue
                r = self.random_invertible(x)
                new_b = r @ d.boundary_basis.matrix()
                bdict[i] = new_b.to_lists()
                if self.rng.randrange(2) == 0:
                    continue
                dmat = c.boundary(i)
                lifts = Matrix(
                    c.ring, [solve_row(dmat, b) for b in new_b.entries],
                    cols=c.dims[i + 1],
                )
                ker = kernel_basis(dmat)
                if len(ker):
                    lifts = lifts + self.random_matrix(x, len(ker)) @ ker.matrix()
                ldict[i] = lifts.to_lists()
        hs = homology_data(f.source)
        for i in range(f.source.length + 1):
            d = hs.degrees[i]
            y = d.betti
            if y == 0 or self.rng.randrange(2) == 0:
                continue
            s = self.random_invertible(y)
            new_h = s @ d.homology_reps.matrix()
            if d.boundary_rank:
                new_h = new_h + (
                    self.random_matrix(y, d.boundary_rank)
                    @ d.boundary_basis.matrix()
                )
            choice.homology_reps[i] = new_h.to_lists()
        return choice

    def random_non_quasi_iso(self, m: int, max_dim: int) -> ChainMap:
        """Null-homotopic self-map on a complex with nonzero homology."""
        _check_params(m, max_dim)
        x, y = self._profile(m, max_dim)
        y[0] = max(1, y[0])
        c = self.rebase(self._normal_form(x, y)).target
        return self.null_homotopic_map(c, c)

    def random_chain_isomorphism(self, m: int, max_dim: int) -> ChainMap:
        _check_params(m, max_dim)
        return self.rebase(self.random_complex(m, max_dim))


class PolyInstanceGenerator:
    """Deterministic free complexes over Q[t] with rank-zero homology."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        t = Polynomial.t()
        self._block_polys = [
            t,
            t - 1,
            t + 1,
            t + 2,
            t * t + 1,
            2 * t - 1,
            Polynomial.constant(2),
        ]
        self._addends = [
            Polynomial.constant(1),
            Polynomial.constant(-1),
            t,
            t + 1,
            Polynomial.constant(2),
        ]
        self._units = [Fraction(-1), Fraction(2), Fraction(1, 2)]

    def random_polynomial(self, max_degree: int = 2) -> Polynomial:
        degree = self.rng.randint(0, max_degree)
        coeffs = [Fraction(self.rng.randint(-2, 2)) for _ in range(degree + 1)]
        if all(c == 0 for c in coeffs):
            coeffs[0] = Fraction(1)
        if coeffs[-1] == 0:
            coeffs[-1] = Fraction(1)
        return Polynomial(coeffs)

    def random_poly_matrix(self, rows: int, cols: int, max_degree: int = 3) -> Matrix:
        return Matrix(
            QPOLY,
            [
                [
                    self.random_polynomial(max_degree)
                    if self.rng.randrange(3) > 0
                    else Polynomial()
                    for _ in range(cols)
                ]
                for _ in range(rows)
            ],
            cols=cols,
        )

    def random_unimodular(self, n: int, ops: int | None = None) -> tuple[Matrix, Matrix]:
        """Unimodular polynomial matrix together with its inverse."""
        one, zero = QPOLY.one, QPOLY.zero
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
        if n == 0:
            m = Matrix(QPOLY, [], cols=0)
            return m, m
        if ops is None:
            ops = n + self.rng.randrange(2)
        for _ in range(ops):
            kind = self.rng.randrange(3)
            if kind == 0 and n >= 2:
                i, j = self.rng.sample(range(n), 2)
                rows[i], rows[j] = rows[j], rows[i]
                for r in range(n):
                    inv[r][i], inv[r][j] = inv[r][j], inv[r][i]
            elif kind == 1:
                i = self.rng.randrange(n)
                u = self.rng.choice(self._units)
                rows[i] = [u * x for x in rows[i]]
                uinv = 1 / u
                for r in range(n):
                    inv[r][i] = uinv * inv[r][i]
            elif n >= 2:
                i, j = self.rng.sample(range(n), 2)
                lam = self.rng.choice(self._addends)
                rows[i] = [x + lam * y for x, y in zip(rows[i], rows[j])]
                for r in range(n):
                    inv[r][j] = inv[r][j] - lam * inv[r][i]
        return Matrix(QPOLY, rows, cols=n), Matrix(QPOLY, inv, cols=n)

    def _block_layout(self, m: int, max_dim: int):
        """Sizes and diagonal polynomials for two-term blocks per degree."""
        layout = []
        for i in range(m):
            if self.rng.randrange(4) == 0:
                layout.append([])
                continue
            size = self.rng.randint(1, min(2, max_dim))
            layout.append([self.rng.choice(self._block_polys) for _ in range(size)])
        return layout

    def _assemble(self, layout, m: int):
        dims = [0] * (m + 1)
        for i, polys in enumerate(layout):
            dims[i] += len(polys)
            dims[i + 1] += len(polys)
        mats = []
        for i in range(m):
            rows = [[QPOLY.zero] * dims[i] for _ in range(dims[i + 1])]
            # blocks at (i, i+1) occupy the leading rows and the trailing
            # columns left by blocks at (i-1, i)
            row_off = 0
            col_off = len(layout[i - 1]) if i > 0 else 0
            for k, p in enumerate(layout[i]):
                rows[row_off + k][col_off + k] = p
            mats.append(Matrix(QPOLY, rows, cols=dims[i]))
        return BasedChainComplex(QPOLY, tuple(dims), tuple(mats))

    def _scramble(self, c: BasedChainComplex) -> BasedChainComplex:
        ps = [self.random_unimodular(n) for n in c.dims]
        mats = tuple(
            ps[i + 1][0] @ c.boundaries[i] @ ps[i][1] for i in range(c.length)
        )
        return BasedChainComplex(QPOLY, c.dims, mats)

    def expected_orders(self, layout, m: int) -> list[Polynomial]:
        orders = []
        for i in range(m + 1):
            p = QPOLY.one
            if i < m:
                for q in layout[i]:
                    p = p * q
            orders.append(p.monic())
        return orders

    def random_rank_zero_complex(self, m: int, max_dim: int):
        """Scrambled block complex plus the expected homology orders."""
        _check_params(m, max_dim)
        layout = self._block_layout(max(m, 1), max_dim)[:m]
        base = self._assemble(layout, m)
        return self._scramble(base), self.expected_orders(layout, m)

    def random_rank_zero_pair(self, m: int, max_dim: int):
        """Chain map between two rank-zero complexes sharing a block layout."""
        _check_params(m, max_dim)
        layout_src = self._block_layout(max(m, 1), max_dim)[:m]
        layout_tgt = [
            [self.rng.choice(self._block_polys) for _ in block]
            for block in layout_src
        ]
        src = self._assemble(layout_src, m)
        tgt = self._assemble(layout_tgt, m)
        # per block on the diagonal: f_{i+1} = p*s and f_i = q*s commute
        fmats = []
        for i in range(m + 1):
            rows = [[QPOLY.zero] * tgt.dims[i] for _ in range(src.dims[i])]
            fmats.append(rows)
        for i, block in enumerate(layout_src):
            col_prev = len(layout_src[i - 1]) if i > 0 else 0
            for k in range(len(block)):
                s = self.rng.choice(self._addends + [QPOLY.one, QPOLY.zero])
                p, q = layout_src[i][k], layout_tgt[i][k]
                fmats[i + 1][k][k] = p * s
                fmats[i][col_prev + k][col_prev + k] = q * s
        f = ChainMap(
            src,
            tgt,
            tuple(
                Matrix(QPOLY, fmats[i], cols=tgt.dims[i]) for i in range(m + 1)
            ),
        )
        ss = [self.random_unimodular(n) for n in src.dims]
        ts = [self.random_unimodular(n) for n in tgt.dims]
        new_src = BasedChainComplex(
            QPOLY,
            src.dims,
            tuple(ss[i + 1][0] @ src.boundaries[i] @ ss[i][1] for i in range(m)),
        )
        new_tgt = BasedChainComplex(
            QPOLY,
            tgt.dims,
            tuple(ts[i + 1][0] @ tgt.boundaries[i] @ ts[i][1] for i in range(m)),
        )
        mats = tuple(ss[i][0] @ f.mats[i] @ ts[i][1] for i in range(m + 1))
        out = ChainMap(new_src, new_tgt, mats)
        return out, self.expected_orders(layout_src, m), self.expected_orders(layout_tgt, m)


def gen_instance(seed: int, m: int = 2, max_dim: int = 4, profile: str = "iso",
                 ring: Ring = QQ):
    """Deterministic instance for the CLI: a document-ready object per profile."""
    from .documents import complex_to_document, map_to_document

    _check_params(m, max_dim)
    if profile == "poly":
        gen = PolyInstanceGenerator(seed)
        c, _ = gen.random_rank_zero_complex(max(m, 1), max_dim)
        return complex_to_document(
            c, comment=f"seed {seed}: free complex over Q[t] with rank-zero homology"
        )
    gen = InstanceGenerator(seed, ring=ring)
    if profile == "acyclic":
        c = gen.random_acyclic(m, max_dim)
        return complex_to_document(c, comment=f"seed {seed}: acyclic complex")
    if profile == "iso":
        f = gen.random_chain_isomorphism(m, max_dim)
        return map_to_document(f, comment=f"seed {seed}: chain isomorphism")
    if profile == "qiso":
        f = gen.random_quasi_iso(m, max_dim)
        return map_to_document(f, comment=f"seed {seed}: quasi-isomorphism")
    if profile == "self":
        f = gen.random_self_quasi_iso(m, max_dim)
        return map_to_document(f, comment=f"seed {seed}: self quasi-isomorphism")
    if profile == "non-qiso":
        f = gen.random_non_quasi_iso(m, max_dim)
        return map_to_document(
            f, comment=f"seed {seed}: map that is not a quasi-isomorphism"
        )
    raise ParamOutOfRange(f"unknown profile {profile!r}")
