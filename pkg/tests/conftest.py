from pathlib import Path

import pytest

from hilbertdim.cli import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return run
