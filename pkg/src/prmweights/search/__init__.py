from src.prmweights.search.boguslavsky import BoguslavskyResult, boguslavsky_check_m2, boguslavsky_sweep
from src.prmweights.search.enumeration import enumerate_subspaces, gaussian_binomial, iter_subspace_matrices
from src.prmweights.search.exhaustive import exhaustive_e_r, exhaustive_u_r_rational
from src.prmweights.search.ghw import GHWRow, ghw, ghw_table
from src.prmweights.search.randomized import randomized_search
