"""Finitely generated abelian groups presented by integer relation matrices.

A group is stored as Z^n / colspan(R) together with the unimodular change
of basis that diagonalizes R.  Canonical coordinates put the free
generators first, then the torsion generators in increasing
invariant-factor order, with every torsion coordinate reduced into
[0, d).  Equality of group elements is then a plain tuple comparison.

Groups deliberately remember their ambient presentation: the simplicial
layer uses it to carry explicit cocycle representatives through every
quotient.

>>> G = cokernel(IntMatrix.from_rows([[2, 0], [0, 3]]))
>>> G.pretty()
'Z/6'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .errors import UsageError
from .intmat import IntMatrix, _snf_full, _xgcd, lattice_basis, solve


def _factorint(n):
    """Prime factorization as a dict {p: e}; trial division is plenty at
    the invariant-factor sizes this package meets."""
    result = {}
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            result[p] = e
        p += 1 if p == 2 else 2
    if n > 1:
        result[n] = result.get(n, 0) + 1
    return result


class FgAbGroup:
    """Z^n / colspan(relations), with canonical coordinates.

    Attributes:
        ambient_rank: n, the rank of the ambient free group.
        relations: the defining relation matrix (n rows).
        free_rank: rank of the free part.
        torsion: invariant factors > 1, each dividing the next.
        basis_map: n x (free_rank + len(torsion)) matrix whose columns are
            ambient representatives of the canonical generators.
    """

    def __init__(self, ambient_rank: int, relations: IntMatrix):
        if relations.rows != ambient_rank:
            raise ValueError("relation matrix must have one row per ambient rank")
        self.ambient_rank = ambient_rank
        self.relations = relations
        U, Ui, S, _ = _snf_full(relations)
        self._U = U
        ndiag = min(S.rows, S.cols)
        diag = [S[i, i] for i in range(ndiag)]
        tors_idx = [i for i, d in enumerate(diag) if d > 1]
        free_idx = [i for i in range(ambient_rank)
                    if i >= ndiag or diag[i] == 0]
        self.free_rank = len(free_idx)
        self.torsion = tuple(diag[i] for i in tors_idx)
        self._coord_idx = free_idx + tors_idx
        self.basis_map = IntMatrix.from_columns(
            [Ui.column(i) for i in self._coord_idx], nrows=ambient_rank)

    # -- canonical coordinates ------------------------------------------

    @property
    def coord_len(self) -> int:
        return self.free_rank + len(self.torsion)

    def coord_orders(self):
        """Order of each canonical generator, 0 meaning infinite."""
        return (0,) * self.free_rank + self.torsion

    def reduce_ambient(self, x: Sequence[int]) -> tuple:
        """Canonical coordinates of an ambient vector."""
        if len(x) != self.ambient_rank:
            raise ValueError("ambient vector length mismatch")
        y = self._U.mul_vector(x)
        out = [y[i] for i in self._coord_idx]
        for t, d in enumerate(self.torsion):
            out[self.free_rank + t] %= d
        return tuple(out)

    def reduce_coords(self, coords: Sequence[int]) -> tuple:
        """Reduce arbitrary integer coordinates into canonical range."""
        if len(coords) != self.coord_len:
            raise ValueError("coordinate length mismatch")
        out = list(coords)
        for t, d in enumerate(self.torsion):
            out[self.free_rank + t] %= d
        return tuple(out)

    def lift(self, coords: Sequence[int]) -> tuple:
        """An ambient representative of the element with these coordinates."""
        return self.basis_map.mul_vector(self.reduce_coords(coords))

    def zero(self) -> tuple:
        return (0,) * self.coord_len

    def add(self, a, b):
        return self.reduce_coords([x + y for x, y in zip(a, b)])

    def neg(self, a):
        return self.reduce_coords([-x for x in a])

    def scale(self, c, a):
        return self.reduce_coords([c * x for x in a])

    def is_zero_coords(self, a) -> bool:
        return self.reduce_coords(a) == self.zero()

    # -- structure -------------------------------------------------------

    def order(self) -> Optional[int]:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.coord_len == 0

    def exponent_two_valuation(self) -> int:
        """Largest k with 2^k dividing the exponent of the torsion part."""
        k = 0
        for d in self.torsion:
            v = 0
            while d % 2 == 0:
                d //= 2
                v += 1
            k = max(k, v)
        return k

    def invariants(self):
        return (self.free_rank, self.torsion)

    def same_invariants(self, other: "FgAbGroup") -> bool:
        return self.invariants() == other.invariants()

    def pretty(self) -> str:
        """Invariant-factor form, e.g. 'Z^2 ⊕ Z/2 ⊕ Z/4', '0' if trivial."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FgAbGroup({self.pretty()})"

    def elements(self, free_bound: Optional[int] = None):
        """Iterate all elements; free coordinates range over
        [-free_bound, free_bound] and require a bound."""
        if self.free_rank and free_bound is None:
            raise UsageError(
                "group is infinite: a coordinate bound for the free part is required")
        free_range = range(-free_bound, free_bound + 1) if self.free_rank else [0]
        ranges = [free_range] * self.free_rank + [range(d) for d in self.torsion]
        if not ranges:
            yield ()
            return
        for combo in itertools.product(*ranges):
            yield tuple(combo)

    @staticmethod
    def from_invariants(free_rank: int, torsion: Sequence[int]) -> "FgAbGroup":
        """Direct construction from invariant factors.

        The divisibility chain is required so that `torsion` really is the
        invariant-factor sequence; generator order is free-then-torsion.
        """
        torsion = tuple(int(d) for d in torsion)
        for d in torsion:
            if d <= 1:
                raise ValueError("torsion invariant factors must be > 1")
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain: {a} does not divide {b}")
        n = free_rank + len(torsion)
        cols = []
        for t, d in enumerate(torsion):
            col = [0] * n
            col[free_rank + t] = d
            cols.append(col)
        rel = (IntMatrix.from_columns(cols, nrows=n) if cols
               else IntMatrix.zeros(n, 0))
        G = FgAbGroup.__new__(FgAbGroup)
        G.ambient_rank = n
        G.relations = rel
        G._U = IntMatrix.identity(n)
        G.free_rank = free_rank
        G.torsion = torsion
        G._coord_idx = list(range(n))
        G.basis_map = IntMatrix.identity(n)
        return G


def cokernel(A: IntMatrix) -> FgAbGroup:
    """Z^rows / colspan(A), with reduction from ambient coordinates."""
    return FgAbGroup(A.rows, A)


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism between presented groups, as a matrix on canonical
    generators (column j = image of generator j, in target coordinates)."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.coord_len:
            raise ValueError("hom matrix row count != target coordinate length")
        if self.matrix.cols != self.source.coord_len:
            raise ValueError("hom matrix column count != source coordinate length")
        # torsion must be respected: d_j * (image of generator j) = 0
        orders = self.source.coord_orders()
        for j, d in enumerate(orders):
            if d and not self.target.is_zero_coords(
                    [d * v for v in self.matrix.column(j)]):
                raise UsageError(
                    f"matrix does not respect torsion: generator {j} has order {d} "
                    "but its image does not")

    def apply(self, coords: Sequence[int]) -> tuple:
        return self.target.reduce_coords(
            self.matrix.mul_vector(self.source.reduce_coords(coords)))

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self ∘ inner."""
        if inner.target is not self.source and \
                not inner.target.same_invariants(self.source):
            raise UsageError("composition mismatch")
        cols = [self.apply(inner.matrix.column(j))
                for j in range(inner.matrix.cols)]
        return GroupHom(inner.source, self.target,
                        IntMatrix.from_columns(cols, nrows=self.target.coord_len))

    def canonical(self) -> "GroupHom":
        """Same hom with every column reduced; canonical form is unique,
        so equality of homs is matrix equality after this."""
        cols = [self.target.reduce_coords(self.matrix.column(j))
                for j in range(self.matrix.cols)]
        return GroupHom(self.source, self.target,
                        IntMatrix.from_columns(cols, nrows=self.target.coord_len))

    def is_zero(self) -> bool:
        return self.canonical().matrix.is_zero()

    @staticmethod
    def zero(source: FgAbGroup, target: FgAbGroup) -> "GroupHom":
        return GroupHom(source, target,
                        IntMatrix.zeros(target.coord_len, source.coord_len))

    @staticmethod
    def identity(G: FgAbGroup) -> "GroupHom":
        return GroupHom(G, G, IntMatrix.identity(G.coord_len))


def _relation_columns(G: FgAbGroup) -> IntMatrix:
    """Relations of G written in its own canonical coordinates: one column
    d * e_j per torsion generator."""
    cols = []
    for j, d in enumerate(G.coord_orders()):
        if d:
            col = [0] * G.coord_len
            col[j] = d
            cols.append(col)
    if not cols:
        return IntMatrix.zeros(G.coord_len, 0)
    return IntMatrix.from_columns(cols, nrows=G.coord_len)


def hom_cokernel(f: GroupHom):
    """Cokernel of f, with the quotient map from f.target.

    Computed by stacking the image columns with the target's own
    relations and presenting the quotient of the target's coordinate
    lattice by both."""
    rel = f.canonical().matrix.hstack(_relation_columns(f.target))
    coker = FgAbGroup(f.target.coord_len, rel)
    cols = [coker.reduce_ambient(e) for e in
            IntMatrix.identity(f.target.coord_len).columns()]
    qmap = GroupHom(f.target, coker,
                    IntMatrix.from_columns(cols, nrows=coker.coord_len))
    return coker, qmap


def group_image_solver(matrix: IntMatrix, target: FgAbGroup):
    """A presolved solver for `matrix * x = b modulo target relations`.

    The target's relation columns are adjoined so the mixed free/torsion
    moduli are handled in one exact solve; reuse it when testing many
    right-hand sides against one map."""
    from .intmat import LinearSolver
    return LinearSolver(matrix.hstack(_relation_columns(target)))


def solve_in_group(matrix: IntMatrix, target: FgAbGroup,
                   b: Sequence[int]) -> Optional[tuple]:
    """One x with matrix*x = b modulo the relations of `target`, or None."""
    x = group_image_solver(matrix, target).solve(list(target.reduce_coords(b)))
    if x is None:
        return None
    return tuple(x[:matrix.cols])


def hom_image(f: GroupHom) -> FgAbGroup:
    """The image of f as an abstract subgroup of the target."""
    f = f.canonical()
    gens = f.matrix.hstack(_relation_columns(f.target))
    num = lattice_basis(gens) if gens.cols else IntMatrix.zeros(f.target.coord_len, 0)
    return _subquotient(num, _relation_columns(f.target))


def hom_kernel(f: GroupHom) -> FgAbGroup:
    """The kernel of f as an abstract subgroup of the source.

    The kernel lattice {x : M x lies in the target relation lattice} is
    the projection of ker[M | -R] onto the x block."""
    f = f.canonical()
    M = f.matrix
    R = _relation_columns(f.target)
    stacked = M.hstack(-R) if R.cols else M
    from .intmat import kernel_basis
    K = kernel_basis(stacked)
    xcols = [K.column(j)[:M.cols] for j in range(K.cols)]
    src_rel = _relation_columns(f.source)
    gens = (IntMatrix.from_columns(xcols, nrows=M.cols) if xcols
            else IntMatrix.zeros(M.cols, 0)).hstack(src_rel)
    num = lattice_basis(gens) if gens.cols else IntMatrix.zeros(M.cols, 0)
    return _subquotient(num, src_rel)


def _subquotient(num_basis: IntMatrix, den_cols: IntMatrix) -> FgAbGroup:
    """lattice(num_basis) / lattice(den_cols), den inside num required."""
    if num_basis.cols == 0:
        return FgAbGroup.from_invariants(0, ())
    rel_cols = []
    for j in range(den_cols.cols):
        y = solve(num_basis, list(den_cols.column(j)))
        if y is None:
            raise ValueError("denominator lattice not inside numerator lattice")
        rel_cols.append(y)
    rel = (IntMatrix.from_columns(rel_cols, nrows=num_basis.cols)
           if rel_cols else IntMatrix.zeros(num_basis.cols, 0))
    return FgAbGroup(num_basis.cols, rel)


@dataclass(frozen=True)
class PrimaryDecomposition:
    """A cyclic primary decomposition of a group G.

    Coordinates of the decomposition list the free generators of G first
    and then one slot per (prime, exponent) summand.  `from_matrix` maps
    decomposition coordinates to G coordinates; `to_matrix` goes the
    other way; composing them is the identity in both directions (after
    canonical reduction).
    """

    group: FgAbGroup
    free_rank: int
    summands: tuple            # ((prime, exponent), ...) aligned with slots
    source_indices: tuple      # canonical generator index behind each summand
    from_matrix: IntMatrix     # G.coord_len x total slots
    to_matrix: IntMatrix       # total slots x G.coord_len

    @property
    def slot_count(self) -> int:
        return self.free_rank + len(self.summands)

    def slot_orders(self):
        return (0,) * self.free_rank + tuple(p ** e for p, e in self.summands)

    def reduce_slots(self, coords):
        out = list(coords)
        for i, d in enumerate(self.slot_orders()):
            if d:
                out[i] %= d
        return tuple(out)

    def to_primary(self, g_coords):
        return self.reduce_slots(self.to_matrix.mul_vector(
            self.group.reduce_coords(g_coords)))

    def from_primary(self, slot_coords):
        return self.group.reduce_coords(self.from_matrix.mul_vector(slot_coords))


def primary_decompose(G: FgAbGroup) -> PrimaryDecomposition:
    """Split each torsion generator into prime-power cyclic summands.

    For an invariant factor d = prod p^e the CRT gives Z/d = ⊕ Z/p^e; the
    p-summand generator is (d / p^e) times the original generator, and
    the original generator is recovered through the CRT coefficients.
    """
    f = G.free_rank
    summands = []
    sources = []
    from_cols = []
    to_rows = [[0] * G.coord_len for _ in range(f)]
    for i in range(f):
        col = [0] * G.coord_len
        col[i] = 1
        from_cols.append(col)
        to_rows[i][i] = 1
    for t, d in enumerate(G.torsion):
        j = f + t
        fact = sorted(_factorint(d).items())
        cofactors = [d // (p ** e) for p, e in fact]
        # CRT coefficients: sum lam_k * cofactor_k = 1 (mod d)
        lams = _crt_coefficients(d, cofactors)
        for (p, e), m, lam in zip(fact, cofactors, lams):
            summands.append((p, e))
            sources.append(j)
            col = [0] * G.coord_len
            col[j] = m
            from_cols.append(col)
            row = [0] * G.coord_len
            row[j] = lam
            to_rows.append(row)
    from_matrix = (IntMatrix.from_columns(from_cols, nrows=G.coord_len)
                   if from_cols else IntMatrix.zeros(G.coord_len, 0))
    to_matrix = (IntMatrix.from_rows(to_rows)
                 if to_rows else IntMatrix.zeros(0, G.coord_len))
    return PrimaryDecomposition(G, f, tuple(summands), tuple(sources),
                                from_matrix, to_matrix)


def _crt_coefficients(d, cofactors):
    """lam_k with sum lam_k cofactors_k = 1 mod d (cofactors coprime overall)."""
    if len(cofactors) == 1:
        # single prime power: cofactor is 1
        return [1]
    lams = []
    for m in cofactors:
        # m and d/m are coprime; the inverse of m mod d/m lifts to the
        # usual idempotent construction
        other = d // m
        g, x, _ = _xgcd(m, other)
        assert g == 1
        lams.append(x % other)
    assert sum(l * m for l, m in zip(lams, cofactors)) % d == 1
    return lams
