"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one pass/fail line with the measured detail; the same
check functions back the `hyturan verify` command.
"""

import pytest

from hyturan import verify


def _run(check):
    result = check(quick=False)
    mark = "PASS" if result.passed else "FAIL"
    print(f"[{mark}] {result.name} ({result.elapsed:.1f}s): {result.detail}")
    assert result.passed, result.detail


def test_criterion_1_graph_consistency():
    _run(verify.criterion_1)


def test_criterion_2_closed_form_sandwich():
    _run(verify.criterion_2)


def test_criterion_3_lagrangian_exactness():
    _run(verify.criterion_3)


def test_criterion_4_lemma_property_suite():
    _run(verify.criterion_4)


def test_criterion_5_oracle_equivalence():
    _run(verify.criterion_5)


def test_criterion_6_exhaustive_extremal_runs():
    _run(verify.criterion_6)


def test_criterion_7_detector_agreement():
    _run(verify.criterion_7)


def test_criterion_8_stability_diagnostics():
    _run(verify.criterion_8)


def test_criterion_9_construction_counts():
    _run(verify.criterion_9)
