"""Homotopy classification of maps to spheres.

For a complex X of dimension at most n+1 (n >= 3) the group [X, S^n]
sits in a short exact sequence

    0 -> H^{n+1}(X;Z/2) / Sq^2(H^{n-1}(X;Z)) -> [X, S^n] -> H^n(X;Z) -> 0,

and the extension is resolved generator by generator: a 2-primary
generator g of order 2^k lifts to gbar with

    2^k * gbar = Sq^2(g'),   where  delta_k(g') = g

for any g' in H^{n-1}(X;Z/2^k) hit by the Bockstein.  Odd-order and free
generators admit split lifts because the kernel is an elementary abelian
2-group.

On top of [X,S^3] the second cohomotopy set of a 4-complex is enumerated
fiberwise over H^2(X;Z): the class beta is realizable iff beta∪beta = 0,
and the fiber over a realizable beta is the cokernel of

    psi[beta] : H^1(X;Z) --(-)∪beta--> H^3(X;Z) --twice-a-lift--> [X,S^3],

where "twice a lift" is well defined because any two lifts differ by
2-torsion.  The comparison group P_beta = coker(2(-)∪beta) receives a
natural surjection from the fiber whose kernel is the image of the
elementary abelian part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .abgroup import (FgAbGroup, GroupHom, PrimaryDecomposition,
                      group_image_solver, hom_cokernel, primary_decompose,
                      solve_in_group)
from .errors import InternalConsistencyError, UsageError
from .intmat import IntMatrix
from .model import CohomologyClass, CohomologyModel

# the free-loop comparison forces the "twice a lift" constant to be +-2;
# the sign is immaterial because only images and cokernels are consumed
TWO_LIFT_CONSTANT = 2

_Q_KERNEL_SEARCH_LIMIT = 2 ** 16


@dataclass(frozen=True)
class SphereMapGroup:
    """[X, S^n] presented as an extension of H^n(X;Z) by coker(Sq2bar).

    `section` holds a chosen lift of each canonical generator of
    H^n(X;Z) as an element of the group; `relations` records, for each
    2-primary summand of H^n(X;Z), the coker(Sq2bar) element equal to
    2^k times its lift.
    """

    n: int
    group: FgAbGroup
    coker_sq2bar: FgAbGroup
    hn: FgAbGroup
    inclusion: GroupHom           # coker(Sq2bar) -> group
    projection: GroupHom          # group -> H^n(X;Z)
    coker_quotient: GroupHom      # H^{n+1}(X;Z/2) -> coker(Sq2bar)
    section: tuple                # group coords, one per H^n generator
    decomposition: PrimaryDecomposition
    primary_lifts: tuple          # group coords, one per decomposition slot
    relations: tuple              # ((slot, 2^k, coker coords), ...)

    def lift_coords(self, hn_coords) -> tuple:
        """The chosen lift of an H^n class, assembled from the section."""
        coords = self.hn.reduce_coords(hn_coords)
        acc = self.group.zero()
        for c, s in zip(coords, self.section):
            acc = self.group.add(acc, self.group.scale(c, s))
        return acc


def coker_sq2bar(model: CohomologyModel, n: int):
    """H^{n+1}(X;Z/2) / Sq^2(H^{n-1}(X;Z)) with its quotient map.

    Sq^2 on an integral class means: reduce mod 2, then square.  The
    quotient of an elementary abelian 2-group is one, so every invariant
    factor of the result is 2.
    """
    if n < 2:
        raise UsageError("coker_sq2bar needs n >= 2")
    source = model.group(n - 1, 0)
    target = model.group(n + 1, 2)
    if source.is_trivial() or target.is_trivial():
        sqbar = GroupHom.zero(source, target)
    else:
        red = model.reduction_hom(n - 1, 0, 2)
        sqbar = model.sq2_hom(n - 1).compose(red)
    coker, qmap = hom_cokernel(sqbar)
    assert all(d == 2 for d in coker.torsion) and coker.free_rank == 0
    return coker, qmap


def sphere_maps(model: CohomologyModel, n: int) -> SphereMapGroup:
    """The group [X, S^n] for a model of dimension <= n+1, n >= 3."""
    if n < 3:
        raise UsageError("sphere_maps needs n >= 3 ([X,S^n] is not a group below)")
    if model.dimension > n + 1:
        raise UsageError(
            f"model dimension {model.dimension} exceeds n+1 = {n + 1}")
    hn = model.group(n, 0)
    coker, proj_coker = coker_sq2bar(model, n)
    dec = primary_decompose(hn)

    s = coker.coord_len
    slots = dec.slot_count
    ambient = s + slots
    rel_cols: List[list] = []
    for i in range(s):
        col = [0] * ambient
        col[i] = 2
        rel_cols.append(col)
    relations = []
    for j, order in enumerate(dec.slot_orders()):
        if order == 0:
            continue
        col = [0] * ambient
        col[s + j] = order
        if order % 2 == 0:
            p, e = dec.summands[j - dec.free_rank]
            assert p == 2 and order == 2 ** e
            gamma = dec.from_primary(_unit(slots, j))
            c = _extension_term(model, n, e, gamma, proj_coker)
            for i, v in enumerate(c):
                col[i] = -v
            relations.append((j, order, c))
        rel_cols.append(col)

    rel = (IntMatrix.from_columns(rel_cols, nrows=ambient)
           if rel_cols else IntMatrix.zeros(ambient, 0))
    E = FgAbGroup(ambient, rel)

    inclusion = GroupHom(coker, E, IntMatrix.from_columns(
        [E.reduce_ambient(_unit(ambient, i)) for i in range(s)],
        nrows=E.coord_len))
    primary_lifts = tuple(E.reduce_ambient(_unit(ambient, s + j))
                          for j in range(slots))

    # the projection sends e-generators to 0 and each slot lift to its
    # H^n class; it is read off the ambient representatives of E's
    # canonical generators
    proj_cols = []
    for t in range(E.coord_len):
        amb = E.basis_map.column(t)
        proj_cols.append(hn.reduce_coords(
            dec.from_matrix.mul_vector(amb[s:])))
    projection = GroupHom(E, hn, IntMatrix.from_columns(
        proj_cols, nrows=hn.coord_len))

    section = []
    for i in range(hn.coord_len):
        w = dec.to_primary(_unit(hn.coord_len, i))
        amb = [0] * ambient
        for j, v in enumerate(w):
            amb[s + j] = v
        section.append(E.reduce_ambient(amb))

    return SphereMapGroup(
        n=n, group=E, coker_sq2bar=coker, hn=hn, inclusion=inclusion,
        projection=projection, coker_quotient=proj_coker,
        section=tuple(section), decomposition=dec,
        primary_lifts=primary_lifts, relations=tuple(relations))


def _unit(length: int, i: int) -> list:
    v = [0] * length
    v[i] = 1
    return v


def _extension_term(model: CohomologyModel, n: int, k: int, gamma,
                    proj_coker: GroupHom):
    """coker(Sq2bar) coordinates of Sq^2(gamma') where delta_k(gamma') is
    the order-2^k class gamma in H^n(X;Z).

    The Bockstein lift exists by exactness of the coefficient sequence;
    its failure means the model's groups and maps are incoherent.  The
    answer does not depend on the chosen lift: two lifts differ by a
    reduced integral class, whose square dies in the quotient.
    """
    m = 2 ** k
    source = model.group(n - 1, m)
    hn = model.group(n, 0)
    if source.is_trivial() and not hn.is_zero_coords(gamma):
        raise UsageError(
            f"model lacks H^{n - 1}(Z/{m}) needed to resolve an order-{m} "
            f"generator of H^{n}(Z)")
    bock = model.bockstein_hom(n - 1, k)
    x = solve_in_group(bock.matrix, hn, gamma)
    if x is None:
        raise InternalConsistencyError(
            f"no Bockstein preimage for an order-{m} class of H^{n}(Z); "
            "the coefficient sequence of a genuine space is exact, so this "
            "model is invalid")
    sq = model.sq2_class(CohomologyClass(n - 1, m, source.reduce_coords(x)))
    return proj_coker.apply(sq.coords)


def two_lift_hom(model: CohomologyModel, S: SphereMapGroup) -> GroupHom:
    """The well-defined homomorphism H^n(X;Z) -> [X,S^n] sending a class
    to twice a lift of it (lift ambiguity is 2-torsion, so it cancels)."""
    cols = [S.group.scale(TWO_LIFT_CONSTANT, s) for s in S.section]
    return GroupHom(S.hn, S.group, IntMatrix.from_columns(
        cols, nrows=S.group.coord_len))


def cup_by_beta_hom(model: CohomologyModel, beta: Sequence[int],
                    scale: int = 1) -> GroupHom:
    """(-) ∪ beta (optionally scaled) as a homomorphism H^1 -> H^3."""
    h1 = model.group(1, 0)
    h3 = model.group(3, 0)
    cols = []
    for i in range(h1.coord_len):
        coords = model.cup_coords(1, 2, _unit(h1.coord_len, i), beta, 0)
        cols.append(h3.scale(scale, coords))
    return GroupHom(h1, h3, IntMatrix.from_columns(cols, nrows=h3.coord_len))


def psi_beta(model: CohomologyModel, beta: Sequence[int],
             S: Optional[SphereMapGroup] = None) -> GroupHom:
    """psi[beta]: H^1(X;Z) -> [X,S^3], the composition of (-)∪beta with
    the twice-a-lift homomorphism."""
    if S is None:
        S = sphere_maps(model, 3)
    return two_lift_hom(model, S).compose(cup_by_beta_hom(model, beta))


@dataclass(frozen=True)
class FiberReport:
    """Everything the enumeration knows about one fiber of
    [X,S^2] -> H^2(X;Z)."""

    beta: tuple                        # H^2(X;Z) coordinates
    realizable: bool                   # beta ∪ beta = 0
    beta_square: tuple                 # H^4(X;Z) coordinates of the square
    fiber: Optional[FgAbGroup]         # coker(psi[beta]) when realizable
    p_beta: FgAbGroup                  # coker(2(-)∪beta)
    q_kernel: tuple                    # coker(Sq2bar) coords spanning ker q
    q_image_order: int
    q_search_exhaustive: bool
    fiber_to_p_beta: Optional[GroupHom]


def pi2_fiber(model: CohomologyModel, beta: Sequence[int],
              S: Optional[SphereMapGroup] = None) -> FiberReport:
    """The fiber of [X,S^2] -> H^2(X;Z) over beta, for dim X <= 4."""
    if model.dimension > 4:
        raise UsageError("pi2_fiber needs a model of dimension <= 4")
    h2 = model.group(2, 0)
    beta = h2.reduce_coords(beta)
    if S is None:
        S = sphere_maps(model, 3)

    square = model.cup_coords(2, 2, beta, beta, 0)
    realizable = all(v == 0 for v in square)

    pb_hom = cup_by_beta_hom(model, beta, scale=2)
    p_beta, p_quot = hom_cokernel(pb_hom)

    q_kernel, q_image_order, exhaustive = _q_kernel_data(model, beta, S)

    fiber = None
    fiber_to_p_beta = None
    if realizable:
        psi = psi_beta(model, beta, S)
        fiber, _ = hom_cokernel(psi)
        # the projection [X,S^3] -> H^3 descends to fiber -> P_beta; the
        # fiber's ambient lattice is the [X,S^3] coordinate lattice, so
        # its basis_map columns are preimages of its generators
        cols = []
        for t in range(fiber.coord_len):
            lift = tuple(fiber.basis_map.column(t))
            cols.append(p_quot.apply(S.projection.apply(lift)))
        fiber_to_p_beta = GroupHom(fiber, p_beta, IntMatrix.from_columns(
            cols, nrows=p_beta.coord_len))
    return FiberReport(beta=beta, realizable=realizable, beta_square=square,
                       fiber=fiber, p_beta=p_beta, q_kernel=q_kernel,
                       q_image_order=q_image_order,
                       q_search_exhaustive=exhaustive,
                       fiber_to_p_beta=fiber_to_p_beta)


def _q_kernel_data(model: CohomologyModel, beta, S: SphereMapGroup):
    """ker(q) inside coker(Sq2bar): classes Sq^2(a) for a in H^2(X;Z/2)
    whose Bockstein delta_1(a) is a cup multiple of beta.

    Searched exhaustively when |H^2(X;Z/2)| <= 2^16, otherwise only over
    generators (flagged)."""
    h2m2 = model.group(2, 2)
    coker = S.coker_sq2bar
    if coker.is_trivial() or h2m2.is_trivial():
        return (), 1 if coker.is_trivial() else coker.order(), True
    cup_hom = cup_by_beta_hom(model, beta)
    h3 = model.group(3, 0)
    delta1 = model.bockstein_hom(2, 1)
    exhaustive = h2m2.order() is not None and h2m2.order() <= _Q_KERNEL_SEARCH_LIMIT
    if exhaustive:
        candidates = list(h2m2.elements())
    else:
        candidates = [_unit(h2m2.coord_len, i) for i in range(h2m2.coord_len)]
    membership = group_image_solver(cup_hom.matrix, h3)
    found = []
    for a in candidates:
        da = delta1.apply(a)
        if membership.solve(list(h3.reduce_coords(da))) is None:
            continue
        sq = model.sq2_class(CohomologyClass(2, 2, h2m2.reduce_coords(a)))
        v = S.coker_quotient.apply(sq.coords)
        if any(v):
            found.append(v)
    basis = _f2_span_basis(found, coker.coord_len)
    kernel_order = 2 ** len(basis)
    image_order = coker.order() // kernel_order
    return tuple(basis), image_order, exhaustive


def _f2_span_basis(vectors, length):
    """Row-reduced basis of the span of 0/1 vectors over F_2."""
    basis = []
    pivots = []
    for v in vectors:
        v = [x % 2 for x in v]
        for b, p in zip(basis, pivots):
            if v[p]:
                v = [(x + y) % 2 for x, y in zip(v, b)]
        if any(v):
            p = next(i for i, x in enumerate(v) if x)
            basis.append(v)
            pivots.append(p)
    return [tuple(b) for b in basis]


def pi2_enumerate(model: CohomologyModel, bound: Optional[int] = None):
    """One FiberReport per beta; free H^2 coordinates need a box bound.

    Returns (reports, total) where total = sum of fiber sizes over the
    realizable classes, or None when some fiber is infinite.
    """
    if model.dimension > 4:
        raise UsageError("pi2_enumerate needs a model of dimension <= 4")
    h2 = model.group(2, 0)
    if h2.free_rank and bound is None:
        raise UsageError(
            "H^2(X;Z) is infinite: pass a coordinate bound for the free part")
    S = sphere_maps(model, 3)
    reports = [pi2_fiber(model, beta, S)
               for beta in h2.elements(free_bound=bound)]
    total = 0
    for r in reports:
        if not r.realizable:
            continue
        size = r.fiber.order()
        if size is None:
            total = None
            break
        total += size
    return reports, total


def pontrjagin_fiber(model: CohomologyModel, beta: Sequence[int]) -> FgAbGroup:
    """For a complex of dimension <= 3 every beta is realizable and the
    fiber is simply P_beta = coker(2(-)∪beta : H^1 -> H^3)."""
    if model.dimension > 3:
        raise UsageError(
            "pontrjagin_fiber applies to dimension <= 3; use pi2_fiber")
    h2 = model.group(2, 0)
    beta = h2.reduce_coords(beta)
    p_beta, _ = hom_cokernel(cup_by_beta_hom(model, beta, scale=2))
    return p_beta


def classify_4manifold_type(model: CohomologyModel) -> int:
    """The trichotomy for a closed connected oriented 4-manifold model:

    1 - some integral class has odd cup square;
    2 - every mod-2 class has vanishing cup square;
    3 - neither (even integral squares, some nonzero mod-2 square).

    Both checks reduce to generators: cross terms of squares are even
    integrally, and mod-2 squaring is additive.
    """
    if model.dimension != 4:
        raise UsageError("type classification needs a 4-dimensional model")
    h4 = model.group(4, 0)
    if h4.invariants() != (1, ()):
        raise UsageError(
            "type classification needs H^4(X;Z) = Z (closed oriented); "
            f"got {h4.pretty()}")
    h2 = model.group(2, 0)
    for i in range(h2.coord_len):
        sq = model.cup_coords(2, 2, _unit(h2.coord_len, i),
                              _unit(h2.coord_len, i), 0)
        if sq[0] % 2 != 0:
            return 1
    h2m2 = model.group(2, 2)
    all_even = True
    for i in range(h2m2.coord_len):
        sq = model.cup_coords(2, 2, _unit(h2m2.coord_len, i),
                              _unit(h2m2.coord_len, i), 2)
        if any(v % 2 for v in sq):
            all_even = False
            break
    return 2 if all_even else 3
