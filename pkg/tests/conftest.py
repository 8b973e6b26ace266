from __future__ import annotations

import pytest

from designforge import Field


@pytest.fixture(scope="session")
def f4() -> Field:
    return Field(4)


@pytest.fixture(scope="session")
def f6() -> Field:
    return Field(6)


@pytest.fixture(scope="session")
def f8() -> Field:
    return Field(8)
