"""The acceptance gate: one test per release criterion.

Each criterion prints its own PASS/FAIL line (run pytest with -s or check
the captured output) and every check is exact, with no numeric tolerance.
"""
import pytest

from fracbal.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("cid", list(CRITERIA))
def test_criterion(cid):
    res = run_criterion(cid, seed=0)
    print(f"{'PASS' if res.ok else 'FAIL'} {res.cid}: {res.details}")
    assert res.ok, f"{res.cid}: {res.details}"
