"""Exact-arithmetic complementary polynomials of the classical families."""

import json

from ._core import (
    check_ids,
    classical_limit_drift,
    cp,
    cp_eval,
    double_fact,
    gauss_poly,
    gen_binom,
    kummer_poly,
    legendre_norm,
    pochhammer,
    probe_translation,
    run_suite_json,
)

__all__ = [
    "check_ids",
    "classical_limit_drift",
    "cp",
    "cp_eval",
    "double_fact",
    "gauss_poly",
    "gen_binom",
    "kummer_poly",
    "legendre_norm",
    "pochhammer",
    "probe_translation",
    "run_suite",
    "run_suite_json",
]


def run_suite(ids=None, grid="default"):
    """Run the identity suite; returns (all_assert_pass, parsed report)."""
    ok, text = run_suite_json(ids or [], grid)
    return ok, json.loads(text)
