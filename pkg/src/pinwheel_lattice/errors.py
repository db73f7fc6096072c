"""Exception hierarchy.

Every error raised on bad input derives from :class:`PinwheelError`, which is
itself a :class:`ValueError`; the CLI maps all of them to exit code 2.
"""

from __future__ import annotations


class PinwheelError(ValueError):
    """Base class for all input and precondition failures."""


class ChartMismatch(PinwheelError):
    pass


class InvalidChart(PinwheelError):
    pass


class InvalidReflection(PinwheelError):
    pass


class UnsupportedChart(PinwheelError):
    pass


class UnsupportedModulus(PinwheelError):
    pass


class UnsupportedInput(PinwheelError):
    pass


class NotInSymplecticCone(PinwheelError):
    pass


class LagrangianAbsent(PinwheelError):
    """A required Lagrangian projective plane does not exist.

    ``homology_class`` names the mod-2 class that fails its existence test.
    """

    def __init__(self, homology_class: str, message: str | None = None):
        self.homology_class = homology_class
        super().__init__(message or f"no Lagrangian RP2 in class {homology_class}")


class EpsilonOutOfRange(PinwheelError):
    pass


class TriangleViolated(PinwheelError):
    pass


class DegenerateInput(PinwheelError):
    pass


class OutsideDomainSpan(PinwheelError):
    pass


class NonPositiveInput(PinwheelError):
    pass


class ParseError(PinwheelError):
    pass
