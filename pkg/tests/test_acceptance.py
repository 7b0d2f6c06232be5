"""Acceptance battery: every criterion at its stated tolerance.

Each test prints one pass/fail line; `planecode suite acceptance` runs the
same battery from the command line.
"""

import pytest

from planecode import acceptance as acc


@pytest.fixture(scope="module")
def ctx():
    return acc.AcceptanceContext(seed=0)


def _run(criterion, ctx):
    result = criterion(ctx)
    print(result.line())
    assert result.passed, result.detail
    return result


def test_criterion_01_dimension_formula(ctx):
    _run(acc.criterion_1_dimension_formula, ctx)


def test_criterion_02_primal_minimum_weight(ctx):
    _run(acc.criterion_2_primal_minimum, ctx)


def test_criterion_03_dual_minimum_weight_even_q(ctx):
    _run(acc.criterion_3_dual_minimum_even, ctx)


def test_criterion_04_dual_minimum_weight_prime_q(ctx):
    _run(acc.criterion_4_dual_minimum_prime, ctx)


def test_criterion_05_baer_witnesses(ctx):
    _run(acc.criterion_5_baer_witnesses, ctx)


def test_criterion_06_isbaer_roundtrip(ctx):
    _run(acc.criterion_6_isbaer_roundtrip, ctx)


def test_criterion_07_embedding_truth_table(ctx):
    _run(acc.criterion_7_embedding_truth_table, ctx)


def test_criterion_08_menelaos_ceva(ctx):
    _run(acc.criterion_8_menelaos_ceva, ctx)


def test_criterion_09_antipodal_models(ctx):
    _run(acc.criterion_9_antipodal_models, ctx)


def test_criterion_10_analyzer_suite(ctx):
    _run(acc.criterion_10_analyzer_suite, ctx)


def test_criterion_11_bagchi_bound(ctx):
    # depends on the words recorded by criteria 5 and 10
    if not ctx.checked_words:
        acc.criterion_5_baer_witnesses(ctx)
        acc.criterion_10_analyzer_suite(ctx)
    _run(acc.criterion_11_bagchi_bound, ctx)
