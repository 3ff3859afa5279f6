"""Homotopy classification of maps to spheres.

Computes the group [X, S^n] (with its extension data) for complexes of
dimension at most n+1, and enumerates the second cohomotopy set [X, S^2]
of a 4-complex fiberwise over H^2(X;Z), from either a finite simplicial
complex or an algebraic cohomology model.
"""

from .abgroup import (FgAbGroup, GroupHom, PrimaryDecomposition, cokernel,
                      hom_cokernel, hom_image, hom_kernel, primary_decompose)
from .errors import (CohomotopyError, InputError, InternalConsistencyError,
                     ModelValidationError, UsageError)
from .intmat import (IntMatrix, SnfResult, invariant_factors, kernel_basis,
                     smith_normal_form, solve_linear)
from .model import (AlgebraicModel, CohomologyClass, CohomologyModel,
                    SimplicialModel, bockstein, load_algebraic_model,
                    load_model_path, load_model_text, model_from_simplicial)
from .simplicial import (Cochain, SimplicialComplex, parse_complex,
                         product_complex, simplicial_map_pullback)
from .spheres import (FiberReport, SphereMapGroup, classify_4manifold_type,
                      coker_sq2bar, pi2_enumerate, pi2_fiber, pontrjagin_fiber,
                      psi_beta, sphere_maps, two_lift_hom)
from .steenrod import cup, cup_i, sq2_cochain
from .torsor import FiniteBiTorsor, gamma_bar_x, gamma_x, verify_conjugacy

__version__ = "0.1.0"

__all__ = [
    "AlgebraicModel", "Cochain", "CohomologyClass", "CohomologyModel",
    "CohomotopyError", "FgAbGroup", "FiberReport", "FiniteBiTorsor",
    "GroupHom", "InputError", "IntMatrix", "InternalConsistencyError",
    "ModelValidationError", "PrimaryDecomposition", "SimplicialComplex",
    "SimplicialModel", "SnfResult", "SphereMapGroup", "UsageError",
    "bockstein", "classify_4manifold_type", "cokernel", "coker_sq2bar",
    "cup", "cup_i", "gamma_bar_x", "gamma_x", "hom_cokernel", "hom_image",
    "hom_kernel", "invariant_factors", "kernel_basis", "load_algebraic_model",
    "load_model_path", "load_model_text", "model_from_simplicial",
    "parse_complex", "pi2_enumerate", "pi2_fiber", "pontrjagin_fiber",
    "primary_decompose", "product_complex", "psi_beta",
    "simplicial_map_pullback", "smith_normal_form", "solve_linear",
    "sphere_maps", "sq2_cochain", "two_lift_hom", "verify_conjugacy",
]
