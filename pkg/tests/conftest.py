"""Shared test setup.

Some exact values in this suite have tens of thousands of digits; lift the
interpreter's int-to-str guard once so assertion reprs never trip it.
"""

import subprocess
import sys

import pytest

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)


@pytest.fixture(scope="session")
def cli():
    """Run the command line tool in a subprocess and return the completed run."""

    def run(*args: str) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, "-m", "congrkit", *args],
            capture_output=True,
            timeout=600,
        )

    return run
