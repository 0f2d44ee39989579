from fractions import Fraction

import pytest

from dquiver.error import FieldError
from dquiver.field import QQ, PrimeField, field_to_json, parse_field


@pytest.mark.parametrize('text, expected', [
    ('Q', QQ),
    ('GF:5', PrimeField(5)),
    ({'GF': 3}, PrimeField(3)),
])
def test__parse_field(text, expected):
    assert parse_field(text) == expected


@pytest.mark.parametrize('text', ['GF:4', 'GF:1', 'R', {'GF': 6}, 'GF:'])
def test__parse_field__rejects(text):
    with pytest.raises(FieldError):
        parse_field(text)


def test__field_to_json__reparses():
    for field in (QQ, PrimeField(7)):
        assert parse_field(field_to_json(field)) == field


def test__coerce__rationals():
    assert QQ.coerce('-6/4') == Fraction(-3, 2)
    assert QQ.coerce(' 5 ') == 5
    assert QQ.coerce(Fraction(1, 3)) == Fraction(1, 3)


@pytest.mark.parametrize('value', ['1/0', 'a', '1.5', True, 1.5])
def test__coerce__rejects(value):
    with pytest.raises(FieldError):
        QQ.coerce(value)


def test__coerce__prime_field():

    gf5 = PrimeField(5)

    assert gf5.coerce('1/2') == 3
    assert gf5.coerce(-1) == 4

    with pytest.raises(FieldError):
        gf5.coerce('1/5')


def test__to_json__rationals():
    assert QQ.to_json(Fraction(4, 2)) == 2
    assert QQ.to_json(Fraction(-1, 3)) == '-1/3'
