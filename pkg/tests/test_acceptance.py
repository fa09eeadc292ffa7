"""The eleven acceptance criteria, one test each.

Each test prints a single ``PASS``/``FAIL`` line naming its criterion; run
``python3 tests/test_acceptance.py`` for the same lines outside pytest.
"""

import sys
import time

import pytest

from toric_seshadri.battery import CRITERIA, SEED, run_battery, run_criterion


def _line(num, title, checks):
    failed = [c for c in checks if not c.passed]
    status = "PASS" if not failed else "FAIL"
    detail = f"{len(checks)} checks" if not failed else "; ".join(
        f"{c.name}: expected {c.expected}, got {c.got}" for c in failed[:3])
    return f"{status} criterion {num}: {title} ({detail})"


@pytest.mark.parametrize("num,title", [(n, t) for n, t, _ in CRITERIA], ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, capsys):
    checks = run_criterion(num, SEED)
    with capsys.disabled():
        print("\n" + _line(num, title, checks))
    assert checks
    assert all(c.passed for c in checks), _line(num, title, checks)


def test_battery_runtime_target():
    start = time.perf_counter()
    run_battery(SEED)
    assert time.perf_counter() - start < 10


if __name__ == "__main__":
    ok = True
    for num, title, checks in run_battery(SEED):
        line = _line(num, title, checks)
        ok &= line.startswith("PASS")
        print(line)
    sys.exit(0 if ok else 1)
