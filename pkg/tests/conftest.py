import pytest

from proxkit.corpus import corpus_lattices, small_lattices


@pytest.fixture(scope="session")
def corpus():
    return corpus_lattices()


@pytest.fixture(scope="session")
def small():
    return small_lattices()


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
