"""Exact arithmetic in Z, Z/m and finite products, with the Bezout-family
constructions and diagonal reduction."""

from .bezout import (
    AdequateFactorization,
    BezoutTriple,
    HermiteCertificate,
    MinPrimeReport,
    adequate_factor,
    bezout_triple,
    canonical_form,
    ext_gcd,
    gh_witness,
    hermite_pair,
    idempotents,
    support_idempotent,
    unique_min_prime_report,
)
from .rings import ExactRing, IntegerRing, ProductRing, ResidueRing, parse_ring
from .smith import DiagCertificate, matmul, smith_form

__all__ = [
    "AdequateFactorization",
    "BezoutTriple",
    "DiagCertificate",
    "ExactRing",
    "HermiteCertificate",
    "IntegerRing",
    "MinPrimeReport",
    "ProductRing",
    "ResidueRing",
    "adequate_factor",
    "bezout_triple",
    "canonical_form",
    "ext_gcd",
    "gh_witness",
    "hermite_pair",
    "idempotents",
    "matmul",
    "parse_ring",
    "smith_form",
    "support_idempotent",
    "unique_min_prime_report",
]
