"""Heegaard triple diagrams: construction, domains, Chern evaluations."""

from .build import (
    AdaptedTriple,
    build_triple,
    binding_order_and_witness,
    rot_from_witness,
    witness_domain,
)
from .diagram import AdmissibilityCertificate, TripleDiagram

__all__ = [
    "AdaptedTriple",
    "AdmissibilityCertificate",
    "TripleDiagram",
    "build_triple",
    "binding_order_and_witness",
    "rot_from_witness",
    "witness_domain",
]
