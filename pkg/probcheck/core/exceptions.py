"""
Custom exceptions for probcheck.

Every exception carries the process exit code the command-line front end
uses when the error escapes a command.
"""

from typing import Any


class ProbCheckError(Exception):
    """Base exception for all probcheck errors."""

    exit_code: int = 1


class ExpressionValidationError(ProbCheckError):
    """Raised when an event expression does not validate against its sample space."""

    def __init__(self, diagnostics: list[Any], event_name: str | None = None):
        """
        Initialize the error from the validation diagnostics.

        Parameters:
            diagnostics (list): Non-empty list of `Diagnostic` objects returned by `validate`.
            event_name (str | None): Name of the offending event, when known.
        """
        self.diagnostics = diagnostics
        self.event_name = event_name
        where = f" in event '{event_name}'" if event_name else ""
        details = "; ".join(d.message for d in diagnostics)
        super().__init__(f"Expression failed validation{where}: {details}")


class UnresolvedReferenceError(ProbCheckError):
    """Raised when an expression references a draw the outcome does not assign."""

    def __init__(self, reference: str):
        """
        Parameters:
            reference (str): Textual form of the draw reference, e.g. ``person[2]``.
        """
        self.reference = reference
        super().__init__(f"Draw '{reference}' has no value in the outcome (was the expression validated?)")


class ProblemParseError(ProbCheckError):
    """Raised when a problem file cannot be parsed into a ProblemSet."""

    def __init__(self, source_name: str, diagnostics: list[Any]):
        """
        Initialize the error with the parse diagnostics.

        Parameters:
            source_name (str): Name of the parsed source (file path or ``<corpus>``).
            diagnostics (list): The `ParseDiagnostic` list; the first entry is the earliest error.
        """
        self.source_name = source_name
        self.diagnostics = diagnostics
        first = diagnostics[0] if diagnostics else None
        if first is None:
            message = f"Failed to parse {source_name}"
        else:
            message = f"{source_name}:{first.span.line}:{first.span.column}: {first.message}"
            if len(diagnostics) > 1:
                message += f" (+{len(diagnostics) - 1} more)"
        super().__init__(message)


class UnknownEventError(ProbCheckError):
    """Raised when a named event or fork is not declared in the problem set."""

    def __init__(self, name: str, available: list[str]):
        """
        Parameters:
            name (str): The requested name.
            available (list[str]): Names declared in the problem set.
        """
        self.name = name
        self.available = available
        listing = ", ".join(available) if available else "none"
        super().__init__(f"Unknown event '{name}' (declared: {listing})")


class InvalidReadingError(ProbCheckError):
    """Raised when an atom list cannot be turned into a pair of readings."""

    def __init__(self, reason: str):
        """
        Parameters:
            reason (str): Why the atom list was rejected.
        """
        self.reason = reason
        super().__init__(f"Cannot build readings: {reason}")


class InvalidBinomialTermError(ProbCheckError):
    """Raised when a binomial term is requested outside 0 <= k <= n."""

    def __init__(self, k: int, n: int):
        """
        Parameters:
            k (int): Requested number of successes.
            n (int): Number of trials.
        """
        self.k = k
        self.n = n
        super().__init__(f"Binomial term needs 0 <= k <= n, got k={k}, n={n}")


class SpaceTooLargeError(ProbCheckError):
    """Raised when exhaustive enumeration would exceed the configured cap."""

    exit_code = 2

    def __init__(self, size: int, cap: int):
        """
        Parameters:
            size (int): Number of outcomes that would have to be enumerated.
            cap (int): The configured enumeration cap.
        """
        self.size = size
        self.cap = cap
        super().__init__(
            f"Sample space has {size} outcomes, above the enumeration cap of {cap} "
            "(raise --max-enumeration or use simulate)"
        )


class MethodMismatchError(ProbCheckError):
    """Raised when enumeration and compositional evaluation disagree."""

    exit_code = 3

    def __init__(self, event_name: str, enumerated: Any, compositional: Any):
        """
        Parameters:
            event_name (str): Event whose two exact values differ.
            enumerated (Fraction): Value from full enumeration.
            compositional (Fraction): Value from compositional evaluation.
        """
        self.event_name = event_name
        self.enumerated = enumerated
        self.compositional = compositional
        super().__init__(
            f"Internal mismatch for '{event_name}': enumeration gives {enumerated}, compositional gives {compositional}"
        )


class ConsistencyFailureError(ProbCheckError):
    """Raised when one or more Monte Carlo estimates fail the z-test."""

    exit_code = 4

    def __init__(self, failed: list[str]):
        """
        Parameters:
            failed (list[str]): Names of the events whose verdict failed.
        """
        self.failed = failed
        super().__init__(f"Consistency check failed for: {', '.join(failed)}")
