"""Explicit ternary cyclotomic polynomials for the family p2 = 1 mod p1, p3 = 1 mod p1*p2."""

from fractions import Fraction

from ._core import (
    Branch,
    Error,
    PrimeTriple,
    TermStream,
    __version__,
    binary_terms_general,
    binary_terms_ordered,
    block_f,
    block_f_oracle,
    block_g,
    block_hw,
    coefficient_at,
    cofactor_psi,
    count_distinct_blocks,
    cyclotomic_dense,
    degree,
    density,
    distinct_block_count,
    enumerate_triples,
    hw_binary,
    hw_ternary,
    is_prime,
    mobius,
    mod_inverse,
    next_p2,
    next_p3,
    quo,
    terms,
    totient,
)


def density_fraction(triple):
    """hw / degree as a reduced fractions.Fraction."""
    (num, den), _ = density(triple)
    return Fraction(num, den)


__all__ = [
    "Branch",
    "Error",
    "PrimeTriple",
    "TermStream",
    "binary_terms_general",
    "binary_terms_ordered",
    "block_f",
    "block_f_oracle",
    "block_g",
    "block_hw",
    "coefficient_at",
    "cofactor_psi",
    "count_distinct_blocks",
    "cyclotomic_dense",
    "degree",
    "density",
    "density_fraction",
    "distinct_block_count",
    "enumerate_triples",
    "hw_binary",
    "hw_ternary",
    "is_prime",
    "mobius",
    "mod_inverse",
    "next_p2",
    "next_p3",
    "quo",
    "terms",
    "totient",
]
