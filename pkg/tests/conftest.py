import pytest

def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False, help="run the long extended-tier checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="extended tier; pass --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


