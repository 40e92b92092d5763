"""The eight acceptance criteria at full scale.

Each criterion prints one ``[PASS]`` or ``[FAIL]`` line with its metrics,
straight to the terminal so the lines survive pytest's output capture.
"""

import time

import pytest

from mudomains.selftest import CHECKS, Scale

SCALE = Scale()
SEED = 0


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__.removeprefix("check_") for c in CHECKS])
def test_criterion(check, capsys):
    start = time.perf_counter()
    result = check(SCALE, SEED)
    with capsys.disabled():
        print(f"\n{result.line()} ({time.perf_counter() - start:.1f}s)")
    assert result.passed, result.line()
