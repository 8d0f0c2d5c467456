"""The 14 acceptance criteria, each an exact check.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``; either way one PASS/FAIL line is
printed per criterion.
"""

import sys

import pytest

from staircase.checks import CRITERIA, run_criterion


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    rep = run_criterion(k)
    with capsys.disabled():
        print(f"\n[criterion {k:2d}] {rep.status} {rep.name} ({rep.runtime:.1f}s)"
              + (f" :: {rep.detail}" if rep.detail else ""))
    assert rep.passed, rep.detail


def test_check_all_small_cli():
    from staircase.cli import run

    assert run(["check", "all", "--n-max", "4"]) == 0


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        rep = run_criterion(k)
        print(f"[criterion {k:2d}] {rep.status} {rep.name} ({rep.runtime:.1f}s)"
              + (f" :: {rep.detail}" if rep.detail else ""))
        failed += not rep.passed
    sys.exit(1 if failed else 0)
