import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


def _cli_path():
    env = os.environ.get("BOXED_BERTRAND_CLI")
    if env:
        return env
    for candidate in (ROOT / "build" / "tools" / "boxed-bertrand", shutil.which("boxed-bertrand")):
        if candidate and pathlib.Path(candidate).exists():
            return str(candidate)
    return None


@pytest.fixture(scope="session")
def cli():
    path = _cli_path()
    if path is None:
        pytest.skip("boxed-bertrand executable not found")

    def run(*args, expect=0):
        proc = subprocess.run([path, *args], capture_output=True, text=True, check=False)
        assert proc.returncode == expect, proc.stderr
        return proc

    return run


@pytest.fixture(scope="session")
def schema():
    base = pathlib.Path(os.environ.get("BOXED_BERTRAND_SCHEMAS", ROOT / "schemas"))

    def load(name):
        return json.loads((base / f"{name}.schema.json").read_text())

    return load
