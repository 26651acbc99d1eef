from src.prmweights.constructions.builders import (
    ConstructionReport,
    PRMCode,
    build_ci_grid,
    build_grid_Y,
    build_lower_bound_subspace,
    default_roots,
    prm_generator_matrix,
)
