"""The seven acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N [...]: PASS|FAIL`` line (shown even when
pytest captures output) and fails with the list of failing checks.
"""

import pytest

from qsheets.suite import CRITERIA, run_criterion

# stated wall-clock budgets, seconds
BUDGETS = {1: 5.0, 2: 120.0, 4: 60.0}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = run_criterion(number, ell=3, seed=0, max_rank=3)
    budget = BUDGETS.get(number, float("inf"))
    failing = [c.to_json() for c in result.checks if c.status == "FAIL"]
    in_time = result.seconds < budget
    verdict = "PASS" if result.passed and in_time else "FAIL"
    passed = len(result.checks) - len(failing)
    with capsys.disabled():
        print(f"\ncriterion {number} [{result.title}]: {verdict} "
              f"({passed}/{len(result.checks)} checks, {result.seconds:.1f}s)")
    assert not failing, failing
    assert in_time, f"took {result.seconds:.1f}s, budget {budget}s"
