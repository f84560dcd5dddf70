import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schemas():
    base = pathlib.Path(os.environ.get("CONCAVITY_SCHEMA_DIR", ROOT / "schema"))
    return {
        "report": json.loads((base / "report.schema.json").read_text()),
        "witness": json.loads((base / "witness.schema.json").read_text()),
    }
