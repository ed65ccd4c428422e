"""Exceptions shared across the package."""


class IgusaError(Exception):
    """Base class for all errors raised by this package."""


class PolynomialParseError(IgusaError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SizeGuardError(IgusaError):
    """An exhaustive enumeration would exceed the configured budget."""


class DegeneracyError(IgusaError):
    """A required non-degeneracy condition failed; carries the report."""

    def __init__(self, report):
        super().__init__("non-degeneracy check failed: "
                         f"{len(report.witnesses)} witness(es)")
        self.report = report


class HypothesisError(IgusaError):
    """A closed-form hypothesis does not hold at the given point."""


class PoleEvaluationError(IgusaError):
    """Exact evaluation was requested at a root of the denominator."""


class InternalConsistencyError(IgusaError):
    """An invariant the formulas guarantee was violated; indicates a bug."""
