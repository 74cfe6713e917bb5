import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dets2.core import Configuration  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

E1 = (Fraction(1), Fraction(0))
E2 = (Fraction(0), Fraction(1))

# v12 = v23 = v34 = e1, v13 = v24 = v14 = e2: det^{S^2} = 1
W_CONFIG = Configuration.from_pairs(
    {(1, 2): E1, (2, 3): E1, (3, 4): E1, (1, 3): E2, (2, 4): E2, (1, 4): E2}
)
# v12 = v23 = v13 = e1, v14 = v24 = v34 = e2: an equal triple, so det^{S^2} = 0
V_CONFIG = Configuration.from_pairs(
    {(1, 2): E1, (2, 3): E1, (1, 3): E1, (1, 4): E2, (2, 4): E2, (3, 4): E2}
)
UNIT_SQUARE_POINTS = ((0, 0), (1, 0), (0, 1), (1, 1))


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture
def w_config():
    return W_CONFIG


@pytest.fixture
def v_config():
    return V_CONFIG


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, label, detail = results[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{n:2d}] {label}  {detail}")
