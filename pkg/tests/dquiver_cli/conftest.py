import os

import pytest

from dquiver import dquiver_cli

# https://mypy.readthedocs.io/en/stable/common_issues.html#import-cycles
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import argparse


@pytest.fixture
def setup_args(mocker):
    """
    Convenient fixture for `dquiver_cli` module to:
        - setup args
        - mock `_run` behaviour
    """

    # https://alysivji.github.io/pytest-fixures-with-function-arguments.html
    def _setup_args(args: list) -> 'argparse.Namespace':

        mocker.patch('dquiver.dquiver_cli._run', name='dquiver_cli._run')

        parser = dquiver_cli.init_argparse()
        args = parser.parse_args(args)

        return args

    return _setup_args


@pytest.fixture
def spec(files_dir):
    """Path of a file under tests/files."""
    return lambda name: os.path.join(files_dir, name)
