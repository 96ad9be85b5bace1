import pytest
from fastapi.testclient import TestClient

from app import engine
from app.engine.eg_engine import COUNTEREXAMPLE_SHAPE
from app.main import app
from app.models.pipedream_model import PipeDream
from app.models.shape_model import MoonShape, RowInterval

TEN_FILLINGS_GRID = """\
.##.
####
####
.##.
"""

WORD_EXAMPLE_CROSSES = ((1, 3), (2, 3), (2, 4), (3, 1), (3, 3), (4, 2), (4, 3))


@pytest.fixture
def ten_shape() -> MoonShape:
    return MoonShape(
        rows=(
            RowInterval(1, 2, 3),
            RowInterval(2, 1, 4),
            RowInterval(3, 1, 4),
            RowInterval(4, 2, 3),
        )
    )


@pytest.fixture
def ten_grid() -> str:
    return TEN_FILLINGS_GRID


@pytest.fixture
def ten_shape_file(tmp_path) -> str:
    path = tmp_path / "ten.txt"
    path.write_text(TEN_FILLINGS_GRID)
    return str(path)


@pytest.fixture
def counterexample_shape() -> MoonShape:
    return COUNTEREXAMPLE_SHAPE


@pytest.fixture
def word_example() -> PipeDream:
    return engine.pipedream.dream(WORD_EXAMPLE_CROSSES, 7)


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c
