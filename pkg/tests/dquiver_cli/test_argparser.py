
import logging

import pytest

from dquiver import dquiver_cli
from dquiver.field import PrimeField


def test__verbose__lvl1(setup_args, spec, caplog):

    args = setup_args(['-v', 'roots', spec('d4.json')])

    with caplog.at_level(logging.DEBUG):
        dquiver_cli.main(args)
        assert 'logging level set to DEBUG' in caplog.text


def test__verbose__lvl2(setup_args, spec, caplog):

    args = setup_args(['-vv', 'roots', spec('d4.json')])

    with caplog.at_level(logging.DEBUG):
        dquiver_cli.main(args)
        assert 'logging level set to DEBUG' in caplog.text


def test__debugger__enable__pycharm(mocker, setup_args, spec):

    settrace = mocker.patch('pydevd_pycharm.settrace')

    args = setup_args(['-d', 'roots', spec('d4.json')])

    dquiver_cli.main(args)

    assert settrace.called


def test__get_version(capsys):

    _ver = dquiver_cli._version

    with pytest.raises(SystemExit) as pytest_wrapped_e:
        parser = dquiver_cli.init_argparse()
        parser.parse_args(['--version'])

    out, err = capsys.readouterr()

    assert _ver in out

    assert pytest_wrapped_e.type == SystemExit
    assert pytest_wrapped_e.value.code == 0


def test__field(setup_args, spec):

    args = setup_args(['--field', 'GF:7', 'roots', spec('d4.json')])
    assert args.field == PrimeField(7)

    args = setup_args(['roots', spec('d4.json')])
    assert args.field is None


@pytest.mark.parametrize('argv', [
    ['--help'],
    ['verify-tables', '--help'],
])
def test__field__default_in_help(argv, capsys):

    with pytest.raises(SystemExit) as pytest_wrapped_e:
        dquiver_cli.init_argparse().parse_args(argv)

    out, err = capsys.readouterr()

    assert pytest_wrapped_e.value.code == 0
    assert 'GF:10007' in out


@pytest.mark.parametrize('argv', [
    [],
    ['order'],
    ['--field', 'GF:8', 'roots', 'q.json'],
    ['--field', 'R', 'roots', 'q.json'],
    ['verify-tables', '--n', '4'],
    ['poset', 'q.json', '--dot', '--json'],
])
def test__usage_error(argv, capsys):

    with pytest.raises(SystemExit) as pytest_wrapped_e:
        dquiver_cli.init_argparse().parse_args(argv)

    out, err = capsys.readouterr()

    assert pytest_wrapped_e.value.code == 1
    assert 'error:' in err
