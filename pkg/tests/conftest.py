import pytest

from symcones.equivariant import ChainSpec

# Chain used throughout: two mixed-sign generators at level 3.
MIXED = ChainSpec(3, ((-2, -1, 4), (-3, 1, 3)))

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def a_family(a: int) -> ChainSpec:
    return ChainSpec(2, ((-1, a),))


@pytest.fixture
def mixed():
    return MIXED


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
