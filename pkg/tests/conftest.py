import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true", default=False,
                     help="run the norm-4 enumerations on rank-24 lattices")


def pytest_configure(config):
    config.addinivalue_line("markers", "deep: long-running enumerations (enable with --deep)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--deep"):
        return
    skip = pytest.mark.skip(reason="needs --deep")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance") or __import__("sys").modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.format_results():
        terminalreporter.write_line(line)
