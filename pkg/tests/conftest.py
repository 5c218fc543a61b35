"""
Pytest configuration and shared fixtures
"""

import copy
import logging
import tempfile
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.core.models.marked_graph import MarkedGraph
from src.core.models.multigraph import MultiGraph
from src.core.services.closed_forms import FanlikeClosedForms
from src.core.services.tutte_engine import TutteEngine
from src.infrastructure.config.config_manager import ConfigManager
from src.infrastructure.localization.i18n import LocalizationManager
from src.interfaces.cli.cli_app import CLIApp
from tests.fixtures.graph_samples import GraphSampleProvider


# Configure logging for tests
logging.basicConfig(level=logging.DEBUG)


@pytest.fixture(scope="session")
def temp_dir():
    """Create temporary directory for test session"""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def engine():
    """Fresh engine with default settings"""
    return TutteEngine()


@pytest.fixture
def closed_forms(engine):
    """Closed-form evaluator over the fresh engine"""
    return FanlikeClosedForms(engine)


@pytest.fixture
def k2_marked():
    """K2 marked at both endpoints, the base of fans and wheels"""
    return MarkedGraph(MultiGraph.complete(2), 0, 1)


@pytest.fixture
def path_marked():
    """Path v - u - w"""
    return MarkedGraph(MultiGraph.path(3), 0, 1, 2)


@pytest.fixture
def cycle_polynomials():
    """T(C_n) = x^(n-1) + ... + x + y for n = 2..7"""
    return {n: GraphSampleProvider.cycle_polynomial(n) for n in range(2, 8)}


@pytest.fixture
def test_config():
    """Default configuration with small verification sizes"""
    config = ConfigManager()._get_default_config()
    config = copy.deepcopy(config)
    config["logging"]["file_path"] = None
    config["verification"].update({
        "corpus_size": 20,
        "two_cut_samples": 4,
        "family_max_n": 3,
        "corollary_max_n": 4,
        "duality_max_n": 1,
        "tau_max_n": 2,
    })
    return config


@pytest.fixture
def cli_app(test_config):
    """CLI application over the test configuration"""
    return CLIApp(test_config, LocalizationManager("en"))


@pytest.fixture
def runner():
    """Click CLI test runner with stderr kept apart"""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def cli(cli_app):
    """The click group bound to the test application"""
    return cli_app.build_cli()


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers"""
    config.addinivalue_line(
        "markers", "unit: mark test as a unit test"
    )
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )
    config.addinivalue_line(
        "markers", "service: mark test as service-related"
    )
    config.addinivalue_line(
        "markers", "cli: mark test as CLI-related"
    )


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers automatically"""
    for item in items:
        # Add markers based on test file location
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        elif "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)

        # Add markers based on test file name
        if "services" in str(item.fspath):
            item.add_marker(pytest.mark.service)
        elif "cli" in str(item.fspath):
            item.add_marker(pytest.mark.cli)


# Cleanup fixtures
@pytest.fixture(autouse=True)
def cleanup_logging():
    """Automatically cleanup logging after each test"""
    yield
    # Reset logging level after test
    logging.getLogger().setLevel(logging.WARNING)
