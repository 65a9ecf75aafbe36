import json
import os
import subprocess

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("PATHSAT_CLI")
    if not path:
        pytest.skip("PATHSAT_CLI not set")

    def run(*args, stdin=None):
        return subprocess.run([path, *args], input=stdin, capture_output=True, text=True, timeout=300)

    return run


@pytest.fixture(scope="session")
def validate():
    import jsonschema

    with open(os.environ["PATHSAT_SCHEMA"]) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    def check(doc):
        validator.validate(doc)
        return doc

    return check
