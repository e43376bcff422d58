import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weylrack.classes import all_classes, enumerate_group
from weylrack.core import GroupKind


@pytest.fixture(scope="session")
def b3():
    return list(enumerate_group(GroupKind("B", 3)))


@pytest.fixture(scope="session")
def b4():
    return list(enumerate_group(GroupKind("B", 4)))


@pytest.fixture(scope="session")
def d4():
    return list(enumerate_group(GroupKind("D", 4)))


@pytest.fixture(scope="session")
def class_cache():
    cache = {}

    def get(kind, n):
        key = (kind, n)
        if key not in cache:
            cache[key] = all_classes(GroupKind(kind, n))
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
