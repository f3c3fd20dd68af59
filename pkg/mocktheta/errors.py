"""Exceptions raised by the series engine, the catalogue and the CLI."""

from __future__ import annotations


class MockThetaError(Exception):
    """Base class; checks turn these into status "error" instead of crashing."""


class ZeroInverse(MockThetaError, ZeroDivisionError):
    """Inverting the zero element of Q(zeta_24)."""


class UnknownConstant(MockThetaError, ValueError):
    """A symbolic constant name that has no cyclotomic representative."""


class NonInvertible(MockThetaError, ZeroDivisionError):
    """A series that is zero up to its order was used as a divisor."""


class PoleAtFactor(MockThetaError, ZeroDivisionError):
    """A factor (1 - c q^e) with e = 0 and c = 1 sits in a denominator."""


class NegativeExponent(MockThetaError, ValueError):
    """A Pochhammer symbol was asked for with a negative starting exponent."""


class OutOfRange(MockThetaError, ValueError):
    """An argument outside the supported range (e.g. partitions of n > 40)."""


class PrecisionError(MockThetaError, ArithmeticError):
    """Not enough guaranteed coefficients to answer."""


class GenericityError(MockThetaError, ValueError):
    """Parameters that make a theta quotient or an Appell-Lerch sum degenerate."""


class ConfigError(MockThetaError, ValueError):
    """Bad configuration file, environment value or flag."""


class ParseError(MockThetaError, ValueError):
    """Expression text that does not parse; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
