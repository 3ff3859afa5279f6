"""Built-in spaces: standard triangulations and algebraic models.

The simplicial builders return `SimplicialComplex` objects; the model
builders return plain dicts in the algebraic model format (ready to be
dumped as JSON or fed to `load_algebraic_model` via json.dumps).  The
files shipped under fixtures/ are generated from these builders by
tools/gen_fixtures.py.
"""

from __future__ import annotations

import itertools
import json

from .simplicial import SimplicialComplex, product_complex


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """The boundary of the n-simplex, a triangulated (n-1)-sphere."""
    return SimplicialComplex.from_facets(
        itertools.combinations(range(n + 1), n))


def circle(n_vertices: int = 3) -> SimplicialComplex:
    if n_vertices < 3:
        raise ValueError("a triangulated circle needs at least 3 vertices")
    return SimplicialComplex.from_facets(
        [(i, (i + 1) % n_vertices) for i in range(n_vertices)])


def rp2_six_vertex() -> SimplicialComplex:
    """The 6-vertex projective plane (antipodal quotient of the
    icosahedron): 6 vertices, all 15 edges, 10 triangles."""
    facets = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
              (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)]
    return SimplicialComplex.from_facets(facets)


def torus_seven_vertex() -> SimplicialComplex:
    """The 7-vertex torus: facets (i, i+1, i+3) and (i, i+2, i+3) mod 7."""
    facets = []
    for i in range(7):
        facets.append(tuple(sorted(((i, (i + 1) % 7, (i + 3) % 7)))))
        facets.append(tuple(sorted(((i, (i + 2) % 7, (i + 3) % 7)))))
    return SimplicialComplex.from_facets(facets)


def s2_x_s1() -> SimplicialComplex:
    """Product triangulation of the 2-sphere with a circle (dimension 3)."""
    return product_complex(boundary_of_simplex(3), circle(3))


def s2_x_s2() -> SimplicialComplex:
    """Product triangulation of two 2-spheres (dimension 4)."""
    return product_complex(boundary_of_simplex(3), boundary_of_simplex(3))


# ---------------------------------------------------------------------------
# algebraic models


def s2_x_s1_model() -> dict:
    """S^2 x S^1 as a 3-dimensional algebraic model; H^2 generator g,
    the fiber over c*g is Z for c = 0 and Z/2c otherwise."""
    return {
        "dimension": 3,
        "k_max": 1,
        "groups": {
            "H0,Z": {"free_rank": 1, "torsion": [], "generators": ["1"]},
            "H1,Z": {"free_rank": 1, "torsion": [], "generators": ["a"]},
            "H2,Z": {"free_rank": 1, "torsion": [], "generators": ["g"]},
            "H3,Z": {"free_rank": 1, "torsion": [], "generators": ["v"]},
            "H2,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["g2"]},
        },
        "maps": [
            {"kind": "cup", "degrees": [1, 1], "coefficients": ["Z"],
             "table": [[[0]]]},
            {"kind": "cup", "degrees": [1, 2], "coefficients": ["Z"],
             "table": [[[1]]]},
            {"kind": "reduction", "degrees": [2], "coefficients": ["Z", "Z/2"],
             "matrix": [[1]]},
        ],
    }


def s2_x_t2_model() -> dict:
    """S^2 x S^1 x S^1.  H^1 basis a1, a2; H^2 basis a = a1∪a2 and the
    sphere class b; H^3 basis h1 = b∪a1, h2 = b∪a2; H^4 = Z vol."""
    return {
        "dimension": 4,
        "k_max": 1,
        "groups": {
            "H0,Z": {"free_rank": 1, "torsion": [], "generators": ["1"]},
            "H1,Z": {"free_rank": 2, "torsion": [], "generators": ["a1", "a2"]},
            "H2,Z": {"free_rank": 2, "torsion": [], "generators": ["a", "b"]},
            "H3,Z": {"free_rank": 2, "torsion": [], "generators": ["h1", "h2"]},
            "H4,Z": {"free_rank": 1, "torsion": [], "generators": ["vol"]},
            "H2,Z/2": {"free_rank": 0, "torsion": [2, 2],
                       "generators": ["a_2", "b_2"]},
            "H4,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["vol_2"]},
        },
        "maps": [
            {"kind": "cup", "degrees": [1, 1], "coefficients": ["Z"],
             "table": [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]]},
            {"kind": "cup", "degrees": [1, 2], "coefficients": ["Z"],
             "table": [[[0, 0], [1, 0]], [[0, 0], [0, 1]]]},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z"],
             "table": [[[0], [1]], [[1], [0]]]},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z/2"],
             "table": [[[0], [1]], [[1], [0]]]},
            {"kind": "reduction", "degrees": [2], "coefficients": ["Z", "Z/2"],
             "matrix": [[1, 0], [0, 1]]},
            {"kind": "sq2", "degrees": [2], "coefficients": ["Z/2"],
             "matrix": [[0, 0]]},
        ],
    }


def enriques_type_model() -> dict:
    """The Enriques/Habegger pattern reduced to the part the pipeline
    uses: H^3(Z) = Z/2, the integral squaring H^2(Z) -> H^4(Z/2) is zero,
    the mod-2 squaring is onto.

    H^2(Z) = Z{u} ⊕ Z/2{t} with even intersection form (u∪u = 2e);
    H^2(Z/2) has the two reductions and the Bockstein partner tau of the
    H^3 generator, and Sq^2(tau) is the generator of H^4(Z/2).
    """
    return {
        "dimension": 4,
        "k_max": 1,
        "groups": {
            "H0,Z": {"free_rank": 1, "torsion": [], "generators": ["1"]},
            "H1,Z": {"free_rank": 0, "torsion": [], "generators": []},
            "H2,Z": {"free_rank": 1, "torsion": [2], "generators": ["u", "t"]},
            "H3,Z": {"free_rank": 0, "torsion": [2], "generators": ["s"]},
            "H4,Z": {"free_rank": 1, "torsion": [], "generators": ["e"]},
            "H2,Z/2": {"free_rank": 0, "torsion": [2, 2, 2],
                       "generators": ["u_2", "t_2", "tau"]},
            "H4,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["e_2"]},
        },
        "maps": [
            {"kind": "reduction", "degrees": [2], "coefficients": ["Z", "Z/2"],
             "matrix": [[1, 0], [0, 1], [0, 0]]},
            {"kind": "bockstein", "degrees": [2], "coefficients": ["Z/2"],
             "matrix": [[0, 0, 1]]},
            {"kind": "sq2", "degrees": [2], "coefficients": ["Z/2"],
             "matrix": [[0, 0, 1]]},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z"],
             "table": [[[2], [0]], [[0], [0]]]},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z/2"],
             "table": [[[0], [0], [0]],
                       [[0], [0], [1]],
                       [[0], [1], [1]]]},
        ],
    }


def cp2_model() -> dict:
    """The complex projective plane: one H^2 generator with odd square."""
    return {
        "dimension": 4,
        "k_max": 1,
        "groups": {
            "H0,Z": {"free_rank": 1, "torsion": [], "generators": ["1"]},
            "H2,Z": {"free_rank": 1, "torsion": [], "generators": ["u"]},
            "H4,Z": {"free_rank": 1, "torsion": [], "generators": ["e"]},
            "H2,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["u_2"]},
            "H4,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["e_2"]},
        },
        "maps": [
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z"],
             "table": [[[1]]]},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z/2"],
             "table": [[[1]]]},
            {"kind": "reduction", "degrees": [2], "coefficients": ["Z", "Z/2"],
             "matrix": [[1]]},
            {"kind": "sq2", "degrees": [2], "coefficients": ["Z/2"],
             "matrix": [[1]]},
        ],
    }


def s2_x_s2_model() -> dict:
    """S^2 x S^2: hyperbolic intersection form, all squares even (Spin)."""
    return {
        "dimension": 4,
        "k_max": 1,
        "groups": {
            "H0,Z": {"free_rank": 1, "torsion": [], "generators": ["1"]},
            "H2,Z": {"free_rank": 2, "torsion": [], "generators": ["u", "v"]},
            "H4,Z": {"free_rank": 1, "torsion": [], "generators": ["e"]},
            "H2,Z/2": {"free_rank": 0, "torsion": [2, 2],
                       "generators": ["u_2", "v_2"]},
            "H4,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["e_2"]},
        },
        "maps": [
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z"],
             "table": [[[0], [1]], [[1], [0]]]},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z/2"],
             "table": [[[0], [1]], [[1], [0]]]},
            {"kind": "reduction", "degrees": [2], "coefficients": ["Z", "Z/2"],
             "matrix": [[1, 0], [0, 1]]},
            {"kind": "sq2", "degrees": [2], "coefficients": ["Z/2"],
             "matrix": [[0, 0]]},
        ],
    }


def t4_model() -> dict:
    """The 4-torus: the exterior algebra on four degree-1 generators.

    H^2 basis is e_ij (i < j); e_ij ∪ e_kl = ±vol exactly when the index
    sets are disjoint, signed by the permutation (i, j, k, l)."""
    ones = list(range(1, 5))
    pairs = [(i, j) for i in ones for j in ones if i < j]
    triples = [(i, j, k) for i in ones for j in ones for k in ones
               if i < j < k]

    def perm_sign(seq):
        sign = 1
        seq = list(seq)
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if seq[i] > seq[j]:
                    sign = -sign
        return sign

    def wedge_coords(indices, basis):
        """Coordinates of a_{i1} ∧ ... in the chosen basis, or zeros."""
        out = [0] * len(basis)
        if len(set(indices)) != len(indices):
            return out
        key = tuple(sorted(indices))
        out[basis.index(key)] = perm_sign(indices)
        return out

    cup11 = [[wedge_coords((i, j), pairs) for j in ones] for i in ones]
    cup12 = [[wedge_coords((i,) + pq, triples) for pq in pairs] for i in ones]
    cup22 = [[wedge_coords(pq + rs, [tuple(ones)]) for rs in pairs]
             for pq in pairs]
    n2 = len(pairs)
    return {
        "dimension": 4,
        "k_max": 1,
        "groups": {
            "H0,Z": {"free_rank": 1, "torsion": [], "generators": ["1"]},
            "H1,Z": {"free_rank": 4, "torsion": [],
                     "generators": [f"a{i}" for i in ones]},
            "H2,Z": {"free_rank": n2, "torsion": [],
                     "generators": [f"e{i}{j}" for i, j in pairs]},
            "H3,Z": {"free_rank": 4, "torsion": [],
                     "generators": [f"f{i}{j}{k}" for i, j, k in triples]},
            "H4,Z": {"free_rank": 1, "torsion": [], "generators": ["vol"]},
            "H2,Z/2": {"free_rank": 0, "torsion": [2] * n2,
                       "generators": [f"e{i}{j}_2" for i, j in pairs]},
            "H4,Z/2": {"free_rank": 0, "torsion": [2], "generators": ["vol_2"]},
        },
        "maps": [
            {"kind": "cup", "degrees": [1, 1], "coefficients": ["Z"],
             "table": cup11},
            {"kind": "cup", "degrees": [1, 2], "coefficients": ["Z"],
             "table": cup12},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z"],
             "table": cup22},
            {"kind": "cup", "degrees": [2, 2], "coefficients": ["Z/2"],
             "table": [[[v % 2 for v in cell] for cell in row]
                       for row in cup22]},
            {"kind": "reduction", "degrees": [2], "coefficients": ["Z", "Z/2"],
             "matrix": [[1 if i == j else 0 for j in range(n2)]
                        for i in range(n2)]},
            {"kind": "sq2", "degrees": [2], "coefficients": ["Z/2"],
             "matrix": [[0] * n2]},
        ],
    }


ALGEBRAIC_MODELS = {
    "s2xs1": s2_x_s1_model,
    "s2xt2": s2_x_t2_model,
    "enriques": enriques_type_model,
    "cp2": cp2_model,
    "s2xs2": s2_x_s2_model,
    "t4": t4_model,
}

SIMPLICIAL_FIXTURES = {
    "circle": lambda: circle(3),
    "tetra_boundary": lambda: boundary_of_simplex(3),
    "simplex4_boundary": lambda: boundary_of_simplex(4),
    "rp2": rp2_six_vertex,
    "torus": torus_seven_vertex,
    "s2xs1_simplicial": s2_x_s1,
}


def model_json(name: str) -> str:
    return json.dumps(ALGEBRAIC_MODELS[name](), indent=1)
