import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dodecarail import rules  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "golden"
RULES = ROOT / "rules" / "full.txt"


@pytest.fixture(scope="session")
def table():
    return rules.load_rule_table()


@pytest.fixture(scope="session")
def rot_oracle():
    import oracles

    return oracles.rotations()
