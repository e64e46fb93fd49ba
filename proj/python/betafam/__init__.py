"""Modular forms attached to order-p divided beta family elements."""

from ._core import (
    a_seq,
    bernoulli,
    delta_coeffs,
    divisibility_table,
    eisenstein_coeffs,
    eisenstein_level1,
    eisenstein_level2,
    enumerate_j,
    is_order_p,
    repro_ids,
    reproduce,
    search_solve,
    section5_form,
    theorem_form,
)

__all__ = [
    "a_seq",
    "bernoulli",
    "delta_coeffs",
    "divisibility_table",
    "eisenstein_coeffs",
    "eisenstein_level1",
    "eisenstein_level2",
    "enumerate_j",
    "is_order_p",
    "repro_ids",
    "reproduce",
    "search_solve",
    "section5_form",
    "theorem_form",
]
