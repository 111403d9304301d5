import pytest

from suffixconvex.verify import run_verification


@pytest.fixture(scope="session")
def default_report():
    """One full default verification run shared by the acceptance tests."""
    return run_verification()
