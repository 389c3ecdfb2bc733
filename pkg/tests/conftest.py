import numpy as np
import pytest

from recipeff.harness import (
    EXAMPLE_DIAG,
    EXAMPLE_EXTENSION_PERRON,
    EXAMPLE_REFERENCE_PERRON,
    example_base,
    example_conjugate_reference,
)


@pytest.fixture(scope="session")
def base_matrix():
    return example_base()


@pytest.fixture(scope="session")
def conjugate_reference():
    return example_conjugate_reference()


@pytest.fixture(scope="session")
def diag():
    return np.array(EXAMPLE_DIAG)


@pytest.fixture(scope="session")
def reference_perron():
    return np.array(EXAMPLE_REFERENCE_PERRON)


@pytest.fixture(scope="session")
def extension_perron_reference():
    return np.array(EXAMPLE_EXTENSION_PERRON)
