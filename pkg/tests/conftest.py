import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from poissonlab.quadrature import build_rules


@pytest.fixture(scope="session")
def rules():
    return build_rules()


@pytest.fixture(scope="session")
def circle_rule(rules):
    return rules[0]


@pytest.fixture(scope="session")
def disk_rule(rules):
    return rules[1]
