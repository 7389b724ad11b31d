import pytest

from gpwspec.catalog import catalog_instance, catalog_names


@pytest.fixture(scope="session")
def catalog():
    return {name: catalog_instance(name) for name in catalog_names()}


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if not acceptance_log.outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_log.lines():
        terminalreporter.write_line(line)
