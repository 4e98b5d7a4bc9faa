import warnings

import pytest

from kerr_casimir.dielectric import default_drude_model, default_hybrid_model
from kerr_casimir.lifshitz import QuadratureSettings


@pytest.fixture(scope="session")
def drude():
    return default_drude_model()


@pytest.fixture(scope="session")
def hybrid():
    return default_hybrid_model()


@pytest.fixture(scope="session")
def fast_settings():
    """Looser tolerance for module-level physics checks (not acceptance)."""
    return QuadratureSettings(rel_tol=1e-5)


@pytest.fixture(scope="session")
def fe_material():
    from kerr_casimir.datasets import fe_like_material

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fe_like_material()
