from functools import lru_cache

import pytest

from ppsim.protocol import ProtocolConfig, metrics, run_pipeline


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", help="include slow tests")


def pytest_runtest_setup(item):
    def getopt(opt):
        return item.config.getoption("--%s" % opt, False)

    for opt in ["slow"]:
        if opt in item.keywords and not getopt(opt):
            pytest.skip("need --%s option to run" % opt)


@lru_cache(maxsize=None)
def _simulate(channel, p):
    return run_pipeline(ProtocolConfig(channel, p))


@pytest.fixture(scope="session")
def simulate():
    return _simulate


@pytest.fixture(scope="session")
def protocol_metrics():
    @lru_cache(maxsize=None)
    def _metrics(channel, p):
        return metrics(_simulate(channel, p))

    return _metrics

