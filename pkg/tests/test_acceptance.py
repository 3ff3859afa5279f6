"""Acceptance gate: every criterion with its exact expected values and
runtime budget, one printed pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import itertools
import random
import time

import pytest

from cohomotopy.abgroup import GroupHom, hom_cokernel, primary_decompose
from cohomotopy.intmat import IntMatrix, _snf_full
from cohomotopy.model import (CohomologyClass, load_model_path,
                              model_from_simplicial)
from cohomotopy.simplicial import Cochain, parse_complex
from cohomotopy.spheres import (classify_4manifold_type, pi2_fiber,
                                pontrjagin_fiber, psi_beta, sphere_maps,
                                two_lift_hom)
from cohomotopy.steenrod import cup, cup_i
from cohomotopy.torsor import (cyclic_group, dihedral_group, gamma_bar_x,
                               gamma_x, quaternion_group, symmetric_group,
                               translation_bitorsor, verify_conjugacy)


def _report(line):
    print(f"PASS: {line}")


def _assert_budget(elapsed, budget, label):
    assert elapsed < budget, f"{label} took {elapsed:.2f}s, budget {budget}s"


def test_acceptance_s2_x_s1_fibers(fixture_dir):
    t0 = time.perf_counter()
    model = load_model_path(str(fixture_dir / "s2xs1.json"))
    S = sphere_maps(model, 3)
    r = pi2_fiber(model, (0,), S)
    assert r.realizable and r.fiber.invariants() == (1, ())
    for c in (1, 2, 3):
        r = pi2_fiber(model, (c,), S)
        assert r.realizable
        assert r.fiber.invariants() == (0, (2 * c,)), (c, r.fiber.invariants())
    elapsed = time.perf_counter() - t0
    _assert_budget(elapsed, 1.0, "S2xS1 fibers")
    _report(f"S2xS1 fibers: Z, Z/2, Z/4, Z/6 over c=0..3 ({elapsed:.3f}s)")


def test_acceptance_s2_x_t2_fibers(fixture_dir):
    t0 = time.perf_counter()
    model = load_model_path(str(fixture_dir / "s2xt2.json"))
    S = sphere_maps(model, 3)
    r = pi2_fiber(model, (1, 0), S)     # beta = a, b = 0
    assert r.realizable
    assert r.fiber.invariants() == (2, (2,))
    # Z/2b ⊕ Z/2b ⊕ Z/2 in invariant-factor form
    want_by_b = {1: (0, (2, 2, 2)), 2: (0, (2, 4, 4))}
    for b, want in want_by_b.items():
        r = pi2_fiber(model, (0, b), S)
        assert r.realizable
        assert r.fiber.invariants() == want, (b, r.fiber.invariants())
    for a, b in ((1, 1), (2, 1), (1, -1)):
        r = pi2_fiber(model, (a, b), S)
        assert not r.realizable
    elapsed = time.perf_counter() - t0
    _assert_budget(elapsed, 1.0, "S2xT2 fibers")
    _report(f"S2xT2 fibers: Z^2+Z/2, (Z/2b)^2+Z/2, ab!=0 unrealizable "
            f"({elapsed:.3f}s)")


def test_acceptance_enriques_extension(fixture_dir):
    t0 = time.perf_counter()
    model = load_model_path(str(fixture_dir / "enriques.json"))
    S = sphere_maps(model, 3)
    assert S.group.invariants() == (0, (4,))
    # the nonsplit extension is detected through a nonzero relation target
    assert len(S.relations) == 1
    slot, order, c = S.relations[0]
    assert order == 2 and any(c)
    elapsed = time.perf_counter() - t0
    _assert_budget(elapsed, 1.0, "Enriques extension")
    _report(f"Enriques-type model: [X,S^3] = Z/4, extension nonsplit "
            f"({elapsed:.3f}s)")


def test_acceptance_pontrjagin_consistency(fixture_dir, algebraic_models,
                                           simplicial_models):
    count = 0
    models = list(algebraic_models.values()) + list(simplicial_models.values())
    low = [M for M in models if M.dimension <= 3]
    assert len(low) >= 6
    for M in low:
        S = sphere_maps(M, 3)
        for beta in M.group(2, 0).elements(free_bound=2):
            r = pi2_fiber(M, beta, S)
            p = pontrjagin_fiber(M, beta)
            assert r.realizable
            assert r.fiber.same_invariants(p), (beta, r.fiber, p)
            count += 1
    _report(f"Pontrjagin consistency on {len(low)} fixtures of dim <= 3, "
            f"{count} betas: pi2_fiber == pontrjagin_fiber")


def test_acceptance_type_classification(fixture_dir):
    expected = {"cp2": 1, "t4": 2, "s2xs2": 2, "enriques": 3}
    for name, want in expected.items():
        model = load_model_path(str(fixture_dir / f"{name}.json"))
        assert classify_4manifold_type(model) == want, name
    _report("type classification: CP2 -> 1, T4 -> 2, S2xS2 -> 2, "
            "Habegger/Enriques-type -> 3")


def test_acceptance_simplicial_cross_check(fixture_dir):
    """The simplicial pipeline against the stated oracles, under 30 s."""
    t0 = time.perf_counter()
    expected_integral = {
        "tetra_boundary": ["Z", "0", "Z"],
        "simplex4_boundary": ["Z", "0", "0", "Z"],
        "rp2": ["Z", "0", "Z/2"],
        "torus": ["Z", "Z^2", "Z"],
    }
    models = {}
    for name, want in expected_integral.items():
        model = load_model_path(str(fixture_dir / f"{name}.facets"))
        models[name] = model
        got = [model.group(q, 0).pretty() for q in range(model.dimension + 1)]
        assert got == want, (name, got)
    # RP2: delta_1 : H^1(Z/2) -> H^2(Z) is an isomorphism of Z/2's
    rp2 = models["rp2"]
    assert rp2.group(1, 2).invariants() == (0, (2,))
    assert rp2.bockstein_hom(1, 1).matrix.entries == (1,)
    # torus cup table: a cup b = -(b cup a) = a generator, squares vanish
    torus = models["torus"]
    ab = torus.cup_coords(1, 1, (1, 0), (0, 1), 0)
    assert ab in ((1,), (-1,))
    assert torus.cup_coords(1, 1, (0, 1), (1, 0), 0) == tuple(-v for v in ab)
    assert torus.cup_coords(1, 1, (1, 0), (1, 0), 0) == (0,)
    assert torus.cup_coords(1, 1, (0, 1), (0, 1), 0) == (0,)
    elapsed = time.perf_counter() - t0
    _assert_budget(elapsed, 30.0, "simplicial cross-check")
    _report(f"simplicial pipeline cross-check on 4 fixtures ({elapsed:.2f}s)")


def test_acceptance_property_suites(fixture_dir, algebraic_models,
                                    simplicial_models):
    """The stand-in property suites for the full-scale claims, under 2
    minutes, all assertions exact."""
    t0 = time.perf_counter()

    # 1. Smith normal form identities on >= 500 random matrices
    rng = random.Random(1894)
    for _ in range(500):
        m, n = rng.randint(0, 6), rng.randint(0, 6)
        A = IntMatrix.from_rows(
            [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]) \
            if m else IntMatrix.zeros(0, n)
        U, Ui, S, V = _snf_full(A)
        assert (U @ A @ V).entries == S.entries
        assert (U @ Ui).entries == IntMatrix.identity(m).entries
        nz = [d for d in S.diagonal() if d]
        assert all(d > 0 for d in nz)
        for a, b in zip(nz, nz[1:]):
            assert b % a == 0

    # 2. delta^2 = 0 and the cup Leibniz rule on random cochains
    fixtures = [simplicial_models[k] for k in
                ("circle", "tetra_boundary", "rp2", "torus")]
    for M in fixtures:
        X = M.complex
        for m in (0, 2, 4):
            for q in range(X.dimension - 1):
                assert (X.coboundary(q + 1, m) @ X.coboundary(q, m)) \
                    .reduced_mod(m).is_zero()
        for p in range(X.dimension + 1):
            for q in range(X.dimension - p):
                for _ in range(3):
                    x = Cochain.from_values(X, p, [rng.randint(-5, 5)
                                                   for _ in range(X.n_simplices(p))])
                    y = Cochain.from_values(X, q, [rng.randint(-5, 5)
                                                   for _ in range(X.n_simplices(q))])
                    lhs = cup(x, y).coboundary()
                    rhs = cup(x.coboundary(), y) + \
                        cup(x, y.coboundary()).scaled((-1) ** p)
                    assert lhs.values == rhs.values

    # 3. Sq^0 = id and Sq^q = cup square on every fixture class
    for M in fixtures:
        X = M.complex
        for q in range(1, X.dimension + 1):
            G = M.group(q, 2)
            for j in range(G.coord_len):
                coords = tuple(int(t == j) for t in range(G.coord_len))
                rep = M.rep_of(CohomologyClass(q, 2, coords))
                assert M.class_of(cup_i(rep, rep, q)).coords == coords
                assert M.class_of(cup_i(rep, rep, 0)).coords == \
                    M.class_of(cup(rep, rep)).coords

    # 4. Bockstein exactness: image(delta_1) = kernel(x2) on all fixtures
    from cohomotopy.abgroup import solve_in_group
    for M in fixtures + [simplicial_models["s2xs1_simplicial"]]:
        for q in range(M.dimension):
            bock = M.bockstein_hom(q, 1)
            target = M.group(q + 1, 0)
            torsion_elems = [
                (0,) * target.free_rank + t
                for t in itertools.product(*[range(d) for d in target.torsion])]
            for x in torsion_elems:
                in_kernel = target.is_zero_coords([2 * v for v in x])
                hit = solve_in_group(bock.matrix, target, x) is not None
                assert in_kernel == hit
            for j in range(bock.matrix.cols):
                img = bock.matrix.column(j)
                assert target.is_zero_coords([2 * v for v in img])

    # 5. section independence of the twice-a-lift homomorphism
    for M in (algebraic_models["enriques"], algebraic_models["s2xt2"],
              simplicial_models["rp2"]):
        S = sphere_maps(M, 3)
        base = two_lift_hom(M, S).canonical()
        C = S.coker_sq2bar
        for _ in range(4):
            cols = []
            for s in S.section:
                noise = tuple(rng.randint(0, 1) for _ in range(C.coord_len))
                cols.append(S.group.scale(
                    2, S.group.add(s, S.inclusion.apply(noise))))
            perturbed = GroupHom(S.hn, S.group, IntMatrix.from_columns(
                cols, nrows=S.group.coord_len)).canonical()
            assert perturbed.matrix == base.matrix

    # 6. sign independence of coker(psi[beta])
    for name in ("s2xs1", "s2xt2", "enriques"):
        M = algebraic_models[name]
        S = sphere_maps(M, 3)
        for beta in list(M.group(2, 0).elements(free_bound=2))[:10]:
            psi = psi_beta(M, beta, S)
            neg = GroupHom(psi.source, psi.target, -psi.matrix)
            assert hom_cokernel(psi)[0].same_invariants(hom_cokernel(neg)[0])

    # 7. fiber order accounting |fiber| = |P_beta| * |im q| on finite cases
    checked = 0
    cases = [(algebraic_models["s2xs1"], [(c,) for c in range(1, 4)]),
             (algebraic_models["s2xt2"], [(0, 1), (0, 2)]),
             (algebraic_models["enriques"], [(0, 0), (0, 1)]),
             (algebraic_models["s2xs2"], [(1, 0), (0, 1), (0, 0)]),
             (simplicial_models["rp2"], [(0,), (1,)])]
    for M, betas in cases:
        S = sphere_maps(M, 3)
        for beta in betas:
            r = pi2_fiber(M, beta, S)
            assert r.realizable
            if r.fiber.order() is not None:
                assert r.fiber.order() == r.p_beta.order() * r.q_image_order
                checked += 1
    assert checked >= 8

    # 8. torsor axioms, gamma multiplicativity, conjugacy up to order 24
    tables = [cyclic_group(24), symmetric_group(4), dihedral_group(6),
              quaternion_group(), symmetric_group(3)]
    for table in tables:
        B = translation_bitorsor(table)      # construction checks the axioms
        n = len(table)
        for x in range(0, n, max(1, n // 6)):
            g = gamma_x(B, x)
            gb = gamma_bar_x(B, x)
            assert all(gb[g[a]] == a for a in range(n))
            for a in range(n):
                for b in range(n):
                    assert g[table[a][b]] == B.right_table[g[a]][g[b]]
        verify_conjugacy(B, 0, n - 1)

    elapsed = time.perf_counter() - t0
    _assert_budget(elapsed, 120.0, "property suites")
    _report(f"property suites: SNF x500, Leibniz/delta^2, Sq identities, "
            f"Bockstein exactness, section/sign independence, order "
            f"accounting, torsors to order 24 ({elapsed:.2f}s)")
