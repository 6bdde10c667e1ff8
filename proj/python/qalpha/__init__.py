"""Irreducible polynomial sequences over GF(2^s) via (Q,alpha)-transforms."""

import json

from ._core import (
    FieldElement,
    FieldSpec,
    Polynomial,
    QalphaError,
    divrem,
    gcd,
    has_periodic_roots,
    is_irreducible,
    is_self_reciprocal,
    kyuregyan_condition,
    meyn_condition,
    monic_irreducibles,
    oracle_factor,
    q_alpha_transform,
    q_transform,
    reciprocal,
    run_suite,
    split_q_image,
    suite_names,
    graph_dot,
)
from . import _core


def generate(spec, alpha, f0, target_degree, seed=0):
    """Run record of a sequence as a dict (same layout as `qalpha sequence`)."""
    return json.loads(_core.sequence_json(spec, alpha, f0, target_degree, seed))


def graph(spec, alpha):
    """Component summary of the theta_alpha graph as a dict."""
    return json.loads(_core.graph_json(spec, alpha))


__all__ = [
    "FieldElement",
    "FieldSpec",
    "Polynomial",
    "QalphaError",
    "divrem",
    "gcd",
    "generate",
    "graph",
    "graph_dot",
    "has_periodic_roots",
    "is_irreducible",
    "is_self_reciprocal",
    "kyuregyan_condition",
    "meyn_condition",
    "monic_irreducibles",
    "oracle_factor",
    "q_alpha_transform",
    "q_transform",
    "reciprocal",
    "run_suite",
    "split_q_image",
    "suite_names",
]
