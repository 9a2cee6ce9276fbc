"""Exception hierarchy shared by every orbitcalc module."""

from __future__ import annotations


class OrbitCalcError(Exception):
    """Base class for all library errors."""


class ContextMismatch(OrbitCalcError, ValueError):
    """Two polynomials live over different variable lists."""


class NotDivisible(OrbitCalcError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class WeightMismatch(OrbitCalcError, ValueError):
    """A profile's total weight differs from (r+1)(d-r)."""


class CodimNegative(OrbitCalcError, ValueError):
    """(r+1)(d-r) < 3, so the orbit class has negative codimension."""


class DegenerateBasis(OrbitCalcError, ValueError):
    """The forms spanning a linear series are linearly dependent."""


class NotSymmetric(OrbitCalcError, ValueError):
    """A polynomial expected to be symmetric is not."""


class InvalidSequence(OrbitCalcError, ValueError):
    """A vanishing sequence violates its invariants."""


class InvalidTree(OrbitCalcError, ValueError):
    """A labelled tree fails validation."""


class NonexistentProfile(OrbitCalcError, ValueError):
    """No linear series realises the requested ramification profile."""


class ParseError(OrbitCalcError, ValueError):
    """Malformed textual or file input."""
