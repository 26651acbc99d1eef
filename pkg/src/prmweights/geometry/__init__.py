from src.prmweights.geometry.basis import MonomialBasis, monomial_basis
from src.prmweights.geometry.hilbert import (
    CBResult,
    cayley_bacharach_check,
    dim_I_k,
    g_X,
    hilbert_ci_formula,
    residual_check,
)
from src.prmweights.geometry.linalg import (
    PolySubspace,
    VanishingResult,
    count_vanishing,
    evaluation_matrix,
    rref,
)
from src.prmweights.geometry.points import (
    PointSet,
    ProjectivePoint,
    enumerate_projective_points,
    grid_points,
)
