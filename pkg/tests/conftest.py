import pytest

from sixfold.recurrence import SeriesMemo


@pytest.fixture(scope="session")
def memo() -> SeriesMemo:
    """One shared memo for the whole run; series values are pure."""
    return SeriesMemo()
