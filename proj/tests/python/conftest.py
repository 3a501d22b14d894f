import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("MIDDLEMEN_CLI") or shutil.which("middlemen")
    if not path:
        pytest.skip("middlemen executable not found (set MIDDLEMEN_CLI)")
    return path
