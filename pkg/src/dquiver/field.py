import abc
import logging
import random

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from dquiver.const import FIELD_RE, FRACTION_RE, SAMPLE_RANGE
from dquiver.error import FieldError


log = logging.getLogger(__name__)


Scalar = Union[int, Fraction]


class Field(abc.ABC):
    """
    An exact field. Elements are plain python numbers so matrix kernels can
    use the arithmetic operators directly and call `normalize` once per entry.
    """

    name: str = ''

    @property
    def zero(self) -> Scalar:
        return self.normalize(0)

    @property
    def one(self) -> Scalar:
        return self.normalize(1)

    @abc.abstractmethod
    def normalize(self, x: Scalar) -> Scalar:
        """Map the result of +, -, * back into canonical form"""

    @abc.abstractmethod
    def inv(self, x: Scalar) -> Scalar:
        pass

    @abc.abstractmethod
    def random_element(self, rng: random.Random) -> Scalar:
        pass

    def coerce(self, value: Any) -> Scalar:
        """
        Read an int, a Fraction or a "p/q" string into this field.

        :param value: The scalar to read.
        :return: The canonical field element.
        """

        if isinstance(value, bool):
            raise FieldError(f"booleans are not scalars: {value!r}")

        if isinstance(value, str):
            match = FRACTION_RE.match(value)
            if not match:
                raise FieldError(f"malformed scalar: {value!r}")
            num, den = match.groups()
            if den is not None and int(den) == 0:
                raise FieldError(f"zero denominator: {value!r}")
            value = Fraction(int(num), int(den or 1))

        if isinstance(value, Fraction):
            return self.from_fraction(value)

        if isinstance(value, int):
            return self.normalize(value)

        raise FieldError(f"unsupported scalar type: {type(value).__name__}")

    def from_fraction(self, value: Fraction) -> Scalar:
        den = self.normalize(value.denominator)
        if den == 0:
            raise FieldError(f"{value} has no image in {self.name}")
        return self.normalize(self.normalize(value.numerator) * self.inv(den))

    def to_json(self, x: Scalar) -> Union[int, str]:
        return int(x)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Rationals(Field):
    """
    The rational numbers, stored as `Fraction` in lowest terms.

    Examples:
        >>> Q = Rationals()
        >>> Q.coerce('6/4')
        Fraction(3, 2)
        >>> Q.to_json(Q.coerce('-2/1'))
        -2
        >>> Q.to_json(Fraction(1, 3))
        '1/3'
    """

    name = 'Q'

    def normalize(self, x: Scalar) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x: Scalar) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def from_fraction(self, value: Fraction) -> Fraction:
        return value

    def random_element(self, rng: random.Random) -> Fraction:
        low, high = SAMPLE_RANGE
        return Fraction(rng.randint(low, high))

    def to_json(self, x: Scalar) -> Union[int, str]:
        x = Fraction(x)
        if x.denominator == 1:
            return x.numerator
        return f'{x.numerator}/{x.denominator}'


def _is_prime(p: int) -> bool:

    if p < 2:
        return False

    for d in (2, 3, 5, 7, 11, 13):
        if p % d == 0:
            return p == d

    d = 17
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2

    return True


@dataclass(frozen=True)
class PrimeField(Field):
    """
    GF(p) with elements stored as ints in [0, p).

    Examples:
        >>> GF7 = PrimeField(7)
        >>> GF7.coerce('3/2')
        5
        >>> GF7.normalize(-1)
        6
        >>> GF7.inv(3)
        5
    """

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FieldError(f"GF(p) needs a prime, got {self.p}")

    @property
    def name(self) -> str:
        return f'GF:{self.p}'

    def normalize(self, x: Scalar) -> int:
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        return x % self.p

    def inv(self, x: Scalar) -> int:
        x = self.normalize(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.p)


QQ = Rationals()


def parse_field(value: Any) -> Field:
    """
    Resolve a field from its cli or json form.

    Examples:
        >>> parse_field('Q')
        Rationals()
        >>> parse_field('GF:5')
        PrimeField(p=5)
        >>> parse_field({'GF': 3})
        PrimeField(p=3)

    :param value: "Q", "GF:p" or {"GF": p}.
    """

    if isinstance(value, Field):
        return value

    if isinstance(value, dict) and set(value) == {'GF'}:
        return PrimeField(int(value['GF']))

    if isinstance(value, str):
        match = FIELD_RE.match(value.strip())
        if match:
            p = match.group(1)
            return QQ if p is None else PrimeField(int(p))

    raise FieldError(f"unknown field: {value!r}")


def field_to_json(field: Field) -> Union[str, dict]:

    if isinstance(field, PrimeField):
        return {'GF': field.p}

    return 'Q'
