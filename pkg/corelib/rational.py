import re
from decimal import Context, Decimal
from fractions import Fraction
from typing import Any

from pydantic import PlainSerializer, PlainValidator
from typing_extensions import Annotated

from .constants import RATIONAL_REGEX

_rational_regex = re.compile(RATIONAL_REGEX)


def parse_rational(v: Any) -> Fraction:
    """Parse ``num/den`` (or a bare integer) into a reduced Fraction.

    Decimal notation is refused: a rational flag must never lose precision
    on the way in.
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise ValueError(f'{v!r} is not a rational')
    if isinstance(v, int):
        return Fraction(v)
    if not isinstance(v, str):
        raise ValueError(f'{v!r} is not a rational, expected "num/den"')
    match = _rational_regex.match(v)
    if match is None:
        raise ValueError(f'{v!r} is not a rational, expected "num/den" (decimals are refused)')
    den = int(match['den']) if match['den'] is not None else 1
    if den <= 0:
        raise ValueError(f'{v!r} must have a positive denominator')
    return Fraction(int(match['num']), den)


def format_rational(v: Fraction | int) -> str:
    v = Fraction(v)
    return f'{v.numerator}/{v.denominator}'


def to_decimal_string(v: Fraction | int | float, digits: int = 17) -> str:
    """Render a value with ``digits`` significant digits, exactly rounded."""
    if isinstance(v, float):
        return format(v, f'.{digits}g')
    v = Fraction(v)
    ctx = Context(prec=digits)
    value = ctx.divide(Decimal(v.numerator), Decimal(v.denominator))
    return str(value)


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]

__all__ = [
    'Rational',
    'parse_rational',
    'format_rational',
    'to_decimal_string',
]
