from src.prmweights.combinatorics.binomial import binom, pi
from src.prmweights.combinatorics.omega import (
    ExponentTuple,
    iter_omega,
    omega_prime_rank,
    omega_prime_size,
    omega_prime_unrank,
    omega_rank,
    omega_size,
    omega_unrank,
    shifted_rank,
)
from src.prmweights.combinatorics.formulas import (
    DiffIdentity,
    FormulaRow,
    H,
    H_prime,
    H_prime_piecewise_m2,
    IndexProfile,
    bracket_l,
    c_bracket,
    diff_ws,
    f,
    f_routes,
    formula_table,
    profile,
    u_rank_m,
    u_top_range,
)
