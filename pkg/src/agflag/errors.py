"""Exception types raised across the package."""

from __future__ import annotations


class AgflagError(Exception):
    """Base class for all package errors."""


# -- finite fields ---------------------------------------------------------

class NotPrime(AgflagError, ValueError):
    pass


class ReducibleModulus(AgflagError, ValueError):
    pass


class FieldTooLarge(AgflagError, ValueError):
    pass


class MixedFields(AgflagError, TypeError):
    pass


class DivisionByZero(AgflagError, ZeroDivisionError):
    pass


# -- semigroups ------------------------------------------------------------

class NotCofinite(AgflagError, ValueError):
    pass


class NotClosed(AgflagError, ValueError):
    pass


class NotAnIdeal(AgflagError, ValueError):
    pass


class LeaderHasGapPair(AgflagError, ValueError):
    pass


class NotMaxSparse(AgflagError, ValueError):
    pass


# -- curves and flags ------------------------------------------------------

class UnknownModel(AgflagError, KeyError):
    pass


class ConfigParse(AgflagError, ValueError):
    pass


class InsufficientBound(AgflagError, ValueError):
    pass


class DegenerateKernel(AgflagError, RuntimeError):
    pass


class EmptySubset(AgflagError, ValueError):
    pass


class BudgetExceeded(AgflagError, RuntimeError):
    pass


class DimensionTooLarge(AgflagError, ValueError):
    pass


class UnknownCase(AgflagError, KeyError):
    pass
