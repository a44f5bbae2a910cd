"""Exact morphism calculus on tensor powers of C^n and the swap certificates built with it."""

from .hand_constructions import Transcript, verify_paper_c13, verify_paper_c17
from .morphisms import (
    Morphism,
    adjoint,
    add,
    apply,
    compose,
    generator,
    hadamard,
    same_action,
    scale,
    tensor,
)
from .swap import (
    SwapVerification,
    SwapWitness,
    WitnessRecord,
    build_swap_candidate,
    extend_witness,
    find_nosym2_witness,
    find_nosymG_witness,
    search_nosymG,
    verify_swap,
)

__all__ = [
    "Morphism", "adjoint", "add", "apply", "compose", "generator", "hadamard",
    "same_action", "scale", "tensor",
    "SwapVerification", "SwapWitness", "WitnessRecord", "build_swap_candidate",
    "extend_witness", "find_nosym2_witness", "find_nosymG_witness", "search_nosymG",
    "verify_swap", "Transcript", "verify_paper_c13", "verify_paper_c17",
]
