from src.prmweights.polygcd.homgcd import (
    HomPoly,
    degree,
    exact_divide,
    find_coprime_pair,
    gcd_pair,
    gcd_subspace,
    hom_mul,
)
