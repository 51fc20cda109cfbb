#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Test suite running every invariant suite end to end.
"""

import os
import pytest
from src.lib.services.verification.suite import VerificationSuite


EXPECTED_INVARIANTS = {
    "dalgebra": {
        "coproduct_triangle", "coproduct_gl", "composition", "gl_associative",
        "concat_via_gl", "antipodes", "hat_l_multiplicative", "post_lie", "graft_mass",
        "multi_graft_single", "psi_triangular", "tree_codec"},
    "kmap": {
        "k_inverse", "k_multiplicative", "k_inverse_recursion", "bell_count",
        "bell_recursion", "gl_identity"},
    "magnus": {
        "exp_chi", "intriguing_identity", "flow_equation", "lambda_flow", "chi_primitive",
        "theta_chi", "generating_ode", "connes_moscovici", "z_routes", "chi_magnus",
        "bch_low_order"},
    "framed": {
        "projection_morphism", "beta_routes", "beta_inverse", "double_exp_bch",
        "double_exp_single", "exponential_product"},
}


def assert_all_pass(result):
    """Every invariant passed and examined at least one case."""
    assert result.status == "success", result.error_message
    failing = [(report.name, report.counterexample)
               for report in result.invariants if not report.passed]
    assert not failing
    assert result.passed
    assert all(report.checked > 0 for report in result.invariants)


@pytest.mark.parametrize("suite_type", ["dalgebra", "kmap", "magnus", "framed"])
def test_low_degree(suite_type):
    """
    Test that every suite passes at degree three.
    """
    result = VerificationSuite.create({"type": suite_type, "max_degree": 3}).run()
    assert result.suite == suite_type
    assert {report.name for report in result.invariants} == EXPECTED_INVARIANTS[suite_type]
    assert_all_pass(result)


def test_single_letter_alphabet():
    """
    Test the D-algebra suite over one generator.
    """
    result = VerificationSuite.create(
        {"type": "dalgebra", "max_degree": 3, "alphabet": "y"}).run()
    assert_all_pass(result)


def test_report_serializes():
    """
    Test the JSON form of a report.
    """
    result = VerificationSuite.create({"type": "kmap", "max_degree": 2}).run()
    payload = result.model_dump()
    assert payload["suite"] == "kmap"
    assert payload["passed"] is True
    assert {"name", "passed", "checked", "counterexample"} == set(payload["invariants"][0])


@pytest.mark.slow
@pytest.mark.parametrize("suite_type", ["dalgebra", "kmap", "magnus", "framed"])
def test_full_degree(suite_type):
    """
    Test every suite at the default degree.
    """
    result = VerificationSuite.create({"type": suite_type}).run()
    assert result.status == "success", result.error_message
    assert result.passed


@pytest.mark.slow
def test_kmap_degree_five():
    """
    Test the K-map suite through degree five.
    """
    result = VerificationSuite.create({"type": "kmap", "max_degree": 5}).run()
    assert result.status == "success", result.error_message
    assert_all_pass(result)


if __name__ == "__main__":
    current_file = os.path.abspath(__file__)
    pytest.main([current_file, '-vv'])
