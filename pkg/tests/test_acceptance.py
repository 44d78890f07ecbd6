"""The nine acceptance criteria, each at its full scale.

Every test prints one [PASS]/[FAIL] line, repeated in the terminal summary.
Criteria 3 and 9 are known to fail; see the README.
"""

import pytest

from udrings import verification as v


def _check(acceptance_log, result):
    line = result.line()
    print(line)
    acceptance_log.append(line)
    for msg in result.detail[1:10]:
        print("   ", msg)
    assert result.checked > 0
    if not result.passed:
        pytest.fail(line, pytrace=False)


def test_1_hom_basis_matches_oracle(acceptance_log):
    _check(acceptance_log, v.check_hom_basis())


def test_2_end_is_k_equivalence(acceptance_log):
    _check(acceptance_log, v.check_end_is_k())


def test_3_syzygy_identities(acceptance_log):
    _check(acceptance_log, v.check_syzygy_identities())


def test_4_ext_table(acceptance_log):
    _check(acceptance_log, v.check_ext_table())


def test_5_orbit_censuses(acceptance_log):
    _check(acceptance_log, v.check_censuses())


def test_6_tube_census(acceptance_log):
    _check(acceptance_log, v.check_tubes())


def test_7_lift_chains(acceptance_log):
    _check(acceptance_log, v.check_lift_chains())


def test_8_lambda31_regression(acceptance_log):
    _check(acceptance_log, v.check_lambda31())


def test_9_classifier_coherence(acceptance_log):
    _check(acceptance_log, v.check_classifier())
