import sys
import os
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from app.models.table import Table
from app.services import cache_service, catalog
from app.services.fibers import enumerate_fiber
from app.services.marginals import marginals_of

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../..")))

# Ensure root directory (where main.py lives) is in sys.path
ROOT = Path(__file__).resolve().parent.parent.parent
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))


@pytest.fixture(autouse=True)
def clear_memo():
    """Each test starts with an empty forest-degree memo."""
    cache_service.clear_cache()
    yield
    cache_service.clear_cache()


@pytest.fixture
def k3():
    return catalog.complete(3)


@pytest.fixture
def c4():
    return catalog.cycle(4)


@pytest.fixture
def c5():
    return catalog.cycle(5)


@pytest.fixture
def k23():
    return catalog.complete_bipartite(2, 3)


@pytest.fixture
def example():
    """Path 0-1-2 plus the isolated vertex 3."""
    return catalog.example_graph()


@pytest.fixture
def prism():
    return catalog.triangular_prism()


@pytest.fixture(scope="session")
def cli():
    """Return the click entry point."""
    from main import create_cli
    return create_cli()


@pytest.fixture
def runner():
    """Return a click test runner."""
    return CliRunner()


@pytest.fixture
def write(tmp_path):
    """Write text to a file under tmp_path and return its path."""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def fiber_pairs():
    """Seeded pairs of tables from the fibers of random degree-d tables."""
    def _pairs(g, degree: int, count: int, seed: int = 0) -> list[tuple[Table, Table]]:
        rng = np.random.default_rng(seed)
        out = []
        for _ in range(count):
            cells = tuple(int(c) for c in rng.integers(0, 1 << g.n, size=degree))
            fiber = enumerate_fiber(g, marginals_of(g, Table(g.n, cells)))
            i, j = rng.choice(len(fiber), size=2)
            out.append((fiber[i], fiber[j]))
        return out
    return _pairs
