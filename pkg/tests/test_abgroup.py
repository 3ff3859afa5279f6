"""Presented abelian groups: cokernels, homomorphisms, primary
decomposition, and the canonical-coordinate contract."""

import itertools
import random

import pytest

from cohomotopy.abgroup import (FgAbGroup, GroupHom, cokernel, hom_cokernel,
                                hom_image, hom_kernel, primary_decompose,
                                solve_in_group)
from cohomotopy.errors import UsageError
from cohomotopy.intmat import IntMatrix, invariant_factors


def test_cokernel_single_relation():
    G = cokernel(IntMatrix.from_rows([[2]]))
    assert G.invariants() == (0, (2,))
    assert G.pretty() == "Z/2"


def test_cokernel_no_relations():
    G = cokernel(IntMatrix.zeros(3, 0))
    assert G.invariants() == (3, ())
    assert G.pretty() == "Z^3"


def test_cokernel_diag_2_3_is_Z6():
    # oracle: the Smith form of diag(2,3) is diag(1,6)
    A = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert invariant_factors(A) == (1, 6)
    G = cokernel(A)
    assert G.invariants() == (0, (6,))


def test_cokernel_invariant_under_column_ops_and_row_perms():
    rng = random.Random(424242)
    for trial in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(0, 4)
        A = IntMatrix.from_rows(
            [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)])
        G = cokernel(A)
        if n >= 2:
            # random column operation: col_j += c * col_i
            i, j = rng.sample(range(n), 2)
            c = rng.randint(-3, 3)
            rows = A.to_rows()
            for r in rows:
                r[j] += c * r[i]
            assert cokernel(IntMatrix.from_rows(rows)).invariants() == G.invariants()
        perm = list(range(m))
        rng.shuffle(perm)
        B = IntMatrix.from_rows([list(A.row(i)) for i in perm])
        assert cokernel(B).invariants() == G.invariants()


def test_reduce_and_lift_roundtrip():
    rng = random.Random(7)
    for trial in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(0, 4)
        A = IntMatrix.from_rows(
            [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)])
        G = cokernel(A)
        # reduce(lift(coords)) is the identity on canonical coordinates
        for _ in range(5):
            coords = [rng.randint(-6, 6) for _ in range(G.coord_len)]
            canon = G.reduce_coords(coords)
            assert G.reduce_ambient(G.lift(canon)) == canon
        # x and x + relation reduce identically
        x = [rng.randint(-6, 6) for _ in range(m)]
        base = G.reduce_ambient(x)
        for j in range(n):
            shifted = [a + b for a, b in zip(x, A.column(j))]
            assert G.reduce_ambient(shifted) == base


def test_canonical_form_ranges():
    G = FgAbGroup.from_invariants(1, (2, 4))
    assert G.coord_orders() == (0, 2, 4)
    assert G.reduce_coords((5, -1, 9)) == (5, 1, 1)
    assert G.order() is None
    assert FgAbGroup.from_invariants(0, (2, 4)).order() == 8


def test_from_invariants_validates_divisibility():
    with pytest.raises(ValueError):
        FgAbGroup.from_invariants(0, (2, 3))
    with pytest.raises(ValueError):
        FgAbGroup.from_invariants(0, (1,))


def test_hom_cokernel_times_two():
    Z = FgAbGroup.from_invariants(1, ())
    f = GroupHom(Z, Z, IntMatrix.from_rows([[2]]))
    coker, qmap = hom_cokernel(f)
    assert coker.invariants() == (0, (2,))
    assert qmap.apply((1,)) != coker.zero()
    assert qmap.apply((2,)) == coker.zero()


def test_hom_cokernel_zero_map():
    Z = FgAbGroup.from_invariants(1, ())
    Z4 = FgAbGroup.from_invariants(0, (4,))
    coker, qmap = hom_cokernel(GroupHom.zero(Z, Z4))
    assert coker.invariants() == (0, (4,))
    assert qmap.apply((1,)) != coker.zero()


@pytest.mark.parametrize("b", [1, 2, 3])
def test_hom_cokernel_diag_2b(b):
    Z2 = FgAbGroup.from_invariants(2, ())
    f = GroupHom(Z2, Z2, IntMatrix.from_rows([[2 * b, 0], [0, 2 * b]]))
    coker, _ = hom_cokernel(f)
    assert coker.invariants() == (0, (2 * b, 2 * b))


def test_hom_torsion_respect_enforced():
    Z2 = FgAbGroup.from_invariants(0, (2,))
    Z = FgAbGroup.from_invariants(1, ())
    with pytest.raises(UsageError):
        GroupHom(Z2, Z, IntMatrix.from_rows([[1]]))
    # but Z/2 -> Z/4 must hit the 2-torsion
    Z4 = FgAbGroup.from_invariants(0, (4,))
    GroupHom(Z2, Z4, IntMatrix.from_rows([[2]]))
    with pytest.raises(UsageError):
        GroupHom(Z2, Z4, IntMatrix.from_rows([[1]]))


def test_compose_associative():
    rng = random.Random(31)
    G = FgAbGroup.from_invariants(1, (2,))
    H = FgAbGroup.from_invariants(0, (4, 8))
    K = FgAbGroup.from_invariants(2, ())
    f = GroupHom(G, H, IntMatrix.from_rows([[2, 2], [4, 4]]))
    g = GroupHom(H, K, IntMatrix.zeros(2, 2))
    comp = g.compose(f)
    for _ in range(20):
        x = [rng.randint(-5, 5) for _ in range(G.coord_len)]
        assert comp.apply(x) == g.apply(f.apply(x))


def test_hom_kernel_and_image():
    Z = FgAbGroup.from_invariants(1, ())
    Z6 = FgAbGroup.from_invariants(0, (6,))
    f = GroupHom(Z, Z6, IntMatrix.from_rows([[2]]))
    assert hom_image(f).invariants() == (0, (3,))     # {0, 2, 4} in Z/6
    assert hom_kernel(f).invariants() == (1, ())      # 3Z inside Z
    # injective map has trivial kernel
    g = GroupHom(Z, Z, IntMatrix.from_rows([[5]]))
    assert hom_kernel(g).is_trivial()
    assert hom_image(g).invariants() == (1, ())
    # finite example: Z/4 -> Z/4 times 2
    Z4 = FgAbGroup.from_invariants(0, (4,))
    h = GroupHom(Z4, Z4, IntMatrix.from_rows([[2]]))
    assert hom_image(h).invariants() == (0, (2,))
    assert hom_kernel(h).invariants() == (0, (2,))


def test_solve_in_group_mixed_moduli():
    # target Z + Z/4: find x with (2x, 3x) = (6, 1) mod relations
    T = FgAbGroup.from_invariants(1, (4,))
    M = IntMatrix.from_rows([[2], [3]])
    x = solve_in_group(M, T, (6, 1))
    assert x is not None
    assert T.reduce_coords(M.mul_vector(x)) == T.reduce_coords((6, 1))
    assert solve_in_group(M, T, (1, 0)) is None


def test_primary_decompose_z6():
    G = FgAbGroup.from_invariants(0, (6,))
    dec = primary_decompose(G)
    assert sorted(dec.summands) == [(2, 1), (3, 1)]
    assert dec.free_rank == 0


def test_primary_decompose_free():
    G = FgAbGroup.from_invariants(2, ())
    dec = primary_decompose(G)
    assert dec.summands == ()
    assert dec.free_rank == 2


def test_primary_decompose_already_primary():
    G = FgAbGroup.from_invariants(0, (2, 4))
    dec = primary_decompose(G)
    assert sorted(dec.summands) == [(2, 1), (2, 2)]


def test_primary_decompose_roundtrip():
    rng = random.Random(1234)
    cases = [(0, (6,)), (1, (2, 4)), (2, (12, 60)), (0, (30,)), (1, ()),
             (0, (2, 2, 8)), (0, (360,))]
    for free, torsion in cases:
        G = FgAbGroup.from_invariants(free, torsion)
        dec = primary_decompose(G)
        # orders multiply back to the group order
        if free == 0:
            prod = 1
            for p, e in dec.summands:
                prod *= p ** e
            assert prod == G.order()
        # from(to(x)) == x on canonical coordinates
        for _ in range(25):
            x = G.reduce_coords(
                [rng.randint(-20, 20) for _ in range(G.coord_len)])
            assert dec.from_primary(dec.to_primary(x)) == x
        # to(from(y)) == y on slot coordinates
        for _ in range(25):
            y = dec.reduce_slots(
                [rng.randint(-20, 20) for _ in range(dec.slot_count)])
            assert dec.to_primary(dec.from_primary(y)) == y


def test_elements_enumeration():
    G = FgAbGroup.from_invariants(0, (2, 4))
    elems = list(G.elements())
    assert len(elems) == 8
    assert len(set(elems)) == 8
    with pytest.raises(UsageError):
        list(FgAbGroup.from_invariants(1, ()).elements())
    assert len(list(FgAbGroup.from_invariants(1, ()).elements(free_bound=2))) == 5


def test_pretty_formats():
    assert FgAbGroup.from_invariants(0, ()).pretty() == "0"
    assert FgAbGroup.from_invariants(1, ()).pretty() == "Z"
    assert FgAbGroup.from_invariants(2, (2, 6)).pretty() == "Z^2 ⊕ Z/2 ⊕ Z/6"
