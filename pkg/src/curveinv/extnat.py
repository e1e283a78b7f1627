"""Extended natural numbers: the value lattice N ∪ {∞} for all counting invariants."""

from __future__ import annotations

from typing import Union


class ExtendedNat:
    """A natural number or the absorbing value ``INFINITY``.

    Totally ordered with n < ∞ for every finite n; addition absorbs into ∞.
    Finite values compare equal to plain ints, so tests can assert against
    integer literals directly.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Union[int, None]):
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError(f"not a natural number: {value!r}")
        self._value = value

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    def finite(self) -> int:
        if self._value is None:
            raise ValueError("infinite value where a finite one is required")
        return self._value

    @staticmethod
    def _coerce(other) -> "ExtendedNat":
        if isinstance(other, ExtendedNat):
            return other
        if isinstance(other, int):
            return ExtendedNat(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._value is None or o._value is None:
            return INFINITY
        return ExtendedNat(self._value + o._value)

    __radd__ = __add__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._value == o._value

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._value is None:
            return False
        if o._value is None:
            return True
        return self._value < o._value

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self == o or self < o

    def __gt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o < self

    def __ge__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o <= self

    def __hash__(self):
        return hash(self._value)

    def __repr__(self):
        return "INFINITY" if self._value is None else f"ExtendedNat({self._value})"

    def __str__(self):
        return "inf" if self._value is None else str(self._value)

    def to_json(self):
        """Serialize: a plain int, or the string "inf" (never a float)."""
        return "inf" if self._value is None else self._value


INFINITY = ExtendedNat(None)


def ext(value: Union[int, ExtendedNat]) -> ExtendedNat:
    """Coerce an int to ExtendedNat (identity on ExtendedNat)."""
    return value if isinstance(value, ExtendedNat) else ExtendedNat(value)
