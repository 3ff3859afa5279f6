"""Cup and cup-i products: the cochain-level identities that pin the
combinatorial formulas down, plus brute-force cohomology oracles."""

import itertools
import random

import pytest

from cohomotopy.catalog import (boundary_of_simplex, circle, rp2_six_vertex,
                                torus_seven_vertex)
from cohomotopy.errors import UsageError
from cohomotopy.intmat import IntMatrix, solve_linear
from cohomotopy.model import CohomologyClass, model_from_simplicial
from cohomotopy.simplicial import Cochain, simplicial_map_pullback
from cohomotopy.steenrod import cup, cup_i, sq2_cochain

FIXTURES = [circle(3), boundary_of_simplex(3), rp2_six_vertex(),
            torus_seven_vertex()]


def random_cochain(rng, X, q, m):
    return Cochain.from_values(
        X, q, [rng.randint(-6, 6) for _ in range(X.n_simplices(q))], modulus=m)


def test_cup_unit():
    rng = random.Random(5)
    for X in FIXTURES:
        one = Cochain.from_values(X, 0, [1] * X.n_simplices(0))
        for q in range(X.dimension + 1):
            x = random_cochain(rng, X, q, 0)
            assert cup(x, one).values == x.values
            assert cup(one, x).values == x.values


def test_cup_leibniz_random_cochains():
    """delta(x cup y) = delta(x) cup y + (-1)^p x cup delta(y), exactly,
    for random (non-cocycle) cochains in every bidegree."""
    rng = random.Random(17)
    for X in FIXTURES:
        for p in range(X.dimension + 1):
            for q in range(X.dimension - p):
                for _ in range(6):
                    x = random_cochain(rng, X, p, 0)
                    y = random_cochain(rng, X, q, 0)
                    lhs = cup(x, y).coboundary()
                    rhs = cup(x.coboundary(), y) + cup(x, y.coboundary()).scaled((-1) ** p)
                    assert lhs.values == rhs.values


def test_cup_associative_at_cochain_level():
    rng = random.Random(23)
    X = torus_seven_vertex()
    for _ in range(8):
        x = random_cochain(rng, X, 1, 0)
        y = random_cochain(rng, X, 0, 0)
        z = random_cochain(rng, X, 1, 0)
        assert cup(cup(x, y), z).values == cup(x, cup(y, z)).values


def test_torus_cup_structure_against_brute_force():
    """[a cup b] generates H^2(T^2), [a cup a] = 0; the oracle decides
    membership in the coboundary image by exact solving, independently of
    the canonical-coordinate machinery."""
    X = torus_seven_vertex()
    M = model_from_simplicial(X)
    a = M.rep_of(CohomologyClass(1, 0, (1, 0)))
    b = M.rep_of(CohomologyClass(1, 0, (0, 1)))
    aa = cup(a, a)
    ab = cup(a, b)
    d1 = X.coboundary(1)
    # a cup a is a coboundary
    assert solve_linear(d1, list(aa.values), 0) is not None
    # a cup b is not, and neither is any proper multiple shift: it generates
    assert solve_linear(d1, list(ab.values), 0) is None
    assert M.class_of(ab).coords in ((1,), (-1,))
    # graded commutativity on classes: [a cup b] = -[b cup a]
    ba = cup(b, a)
    summed = [x + y for x, y in zip(ab.values, ba.values)]
    assert solve_linear(d1, summed, 0) is not None


def test_sphere_cup_vanishes_by_degree():
    X = boundary_of_simplex(3)
    M = model_from_simplicial(X)
    g = M.rep_of(CohomologyClass(2, 0, (1,)))
    assert cup(g, g).values == ()   # no 4-simplices at all


def test_cup_i_requires_mod2_and_range():
    X = rp2_six_vertex()
    x = Cochain.zero(X, 1, 2)
    with pytest.raises(UsageError):
        cup_i(x, Cochain.zero(X, 1, 0), 0)
    with pytest.raises(UsageError):
        cup_i(x, x, 2)


def test_cup0_equals_cup_mod2():
    rng = random.Random(29)
    for X in FIXTURES:
        for p in range(X.dimension + 1):
            for q in range(X.dimension + 1 - p):
                x = random_cochain(rng, X, p, 2)
                y = random_cochain(rng, X, q, 2)
                direct = cup(x, y)
                assert cup_i(x, y, 0).values == direct.values


def test_cup_i_coboundary_identity_random():
    """delta(x cup_i y) = x cup_{i-1} y + y cup_{i-1} x
                          + delta(x) cup_i y + x cup_i delta(y)  (mod 2),
    exact at the cochain level, with cup_{-1} = 0."""
    rng = random.Random(31)
    for X in FIXTURES:
        for p in range(X.dimension + 1):
            for q in range(X.dimension + 1 - p):
                for i in range(0, min(p, q) + 1):
                    for _ in range(4):
                        x = random_cochain(rng, X, p, 2)
                        y = random_cochain(rng, X, q, 2)
                        lhs = cup_i(x, y, i).coboundary()
                        rhs = Cochain.zero(X, p + q - i + 1, 2)
                        if i >= 1:
                            rhs = rhs + cup_i(x, y, i - 1) + cup_i(y, x, i - 1)
                        rhs = rhs + cup_i(x.coboundary(), y, i)
                        rhs = rhs + cup_i(x, y.coboundary(), i)
                        assert lhs.values == rhs.values, (p, q, i)


def test_sq0_is_identity_on_cocycles():
    """x cup_q x = x pointwise for a mod-2 q-cochain (so Sq^0 = id)."""
    rng = random.Random(37)
    for X in FIXTURES:
        for q in range(X.dimension + 1):
            x = random_cochain(rng, X, q, 2)
            assert cup_i(x, x, q).values == tuple(v * v % 2 for v in x.values)


def test_sqq_is_cup_square_on_classes():
    """[x cup_0 x] equals the mod-2 cup square for every fixture class."""
    for X in FIXTURES:
        M = model_from_simplicial(X)
        for q in range(1, X.dimension + 1):
            G = M.group(q, 2)
            for j in range(G.coord_len):
                rep = M.rep_of(CohomologyClass(q, 2, tuple(
                    1 if t == j else 0 for t in range(G.coord_len))))
                left = M.class_of(cup_i(rep, rep, 0))
                right = M.class_of(cup(rep, rep))
                assert left.coords == right.coords


def test_rp2_w_cup_w_nonzero_brute_force():
    """The H^1(RP^2;Z/2) generator has nonzero square.

    Oracle: enumerate all 2^15 mod-2 1-cochains and collect every
    coboundary; w cup w must avoid that whole set."""
    X = rp2_six_vertex()
    M = model_from_simplicial(X)
    w = M.rep_of(CohomologyClass(1, 2, (1,)))
    ww = cup_i(w, w, 0)
    assert any(ww.values)
    n1 = X.n_simplices(1)
    assert n1 == 15
    d1 = X.coboundary(1, 2)
    coboundaries = set()
    for bits in itertools.product((0, 1), repeat=n1):
        coboundaries.add(tuple(v % 2 for v in d1.mul_vector(bits)))
    assert ww.values not in coboundaries


def test_sq2_degenerate_degrees():
    X = rp2_six_vertex()
    z = Cochain.from_values(X, 0, [1] * 6, modulus=2)
    assert sq2_cochain(z).is_zero()


def test_sq2_representative_independence():
    """Perturb a cocycle representative by a coboundary: the squared
    class must not move (checked against the perturbation oracle on every
    fixture that has mod-2 classes in squaring range)."""
    rng = random.Random(41)
    for X in FIXTURES:
        M = model_from_simplicial(X)
        for q in range(2, X.dimension + 1):
            G = M.group(q, 2)
            for j in range(G.coord_len):
                z = M.rep_of(CohomologyClass(q, 2, tuple(
                    1 if t == j else 0 for t in range(G.coord_len))))
                base = M.class_of(sq2_cochain(z))
                for _ in range(4):
                    u = random_cochain(rng, X, q - 1, 2)
                    z2 = z + u.coboundary()
                    assert M.class_of(sq2_cochain(z2)).coords == base.coords


def test_sq2_additive_on_classes():
    for X in FIXTURES:
        M = model_from_simplicial(X)
        for q in range(2, X.dimension + 1):
            G = M.group(q, 2)
            elems = list(G.elements())
            for x in elems:
                for y in elems:
                    sx = M.sq2_class(CohomologyClass(q, 2, x))
                    sy = M.sq2_class(CohomologyClass(q, 2, y))
                    sxy = M.sq2_class(CohomologyClass(q, 2, G.add(x, y)))
                    assert sxy.coords == M.group(q + 2, 2).add(sx.coords, sy.coords)


def test_cup_natural_under_automorphism():
    """Pullback along a nontrivial simplicial automorphism of RP^2
    commutes with the cup product at the class level."""
    X = rp2_six_vertex()
    M = model_from_simplicial(X)
    auto = _nontrivial_automorphism(X)
    w = M.rep_of(CohomologyClass(1, 2, (1,)))
    lhs = M.class_of(simplicial_map_pullback(auto, cup_i(w, w, 0), X))
    pw = simplicial_map_pullback(auto, w, X)
    rhs = M.class_of(cup_i(pw, pw, 0))
    assert lhs.coords == rhs.coords
    assert any(lhs.coords)      # the generator's square survives pullback


def _nontrivial_automorphism(X):
    """Search the vertex permutations for a simplicial automorphism."""
    facets = set(X.facets())
    verts = X.vertices
    for perm in itertools.permutations(verts):
        if perm == tuple(verts):
            continue
        mapping = dict(zip(verts, perm))
        if all(tuple(sorted(mapping[v] for v in f)) in facets for f in facets):
            return mapping
    raise AssertionError("no nontrivial automorphism found")
