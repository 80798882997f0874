from pathlib import Path

import pytest

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fixture_paths(data_dir) -> dict:
    return {
        "snapshots": data_dir / "snapshots.csv",
        "strength": data_dir / "strength.csv",
        "overrides": data_dir / "overrides.json",
        "windows": data_dir / "windows.json",
    }
