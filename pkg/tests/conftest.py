import pytest

from e6grad import verify


@pytest.fixture(scope="session")
def ws():
    """Shared workspace so the 78-dim models build once per test run."""
    return verify.Workspace()


@pytest.fixture(scope="session")
def albert(ws):
    return ws.model("albert")


@pytest.fixture(scope="session")
def tits(ws):
    return ws.model("tits")


@pytest.fixture(scope="session")
def flag(ws):
    return ws.model("flag")


@pytest.fixture(scope="session")
def chevalley(ws):
    return ws.model("chevalley")
