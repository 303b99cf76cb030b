# GCX Exception Hierarchy
# Standardized error handling across the library and the CLI

import logging
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class GCXError(Exception):
    """Base exception for all weighted-complex / Coxeter errors."""

    code = "error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self):
        if self.details:
            return f"{self.message} | Details: {self.details}"
        return self.message

    def summary(self) -> str:
        return self.message


class ConfigurationError(GCXError):
    """Configuration and setup errors."""

    code = "config"


class ValidationError(GCXError):
    """A complex violates the weighted 2-complex axioms."""

    code = "validation"

    def __init__(self, message: str, violations=None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details)
        self.violations = list(violations or [])


class CycleError(GCXError):
    """Vertex sequence cannot be a cycle (repeats, length 1 or 2)."""

    code = "cycle"


class WeightError(GCXError):
    """Weight outside N ∪ {inf} or misplaced."""

    code = "weight"


class DegeneracyError(GCXError):
    """Quotient produced a loop, a short boundary or a weight-1 class."""

    code = "degeneracy"


class MorphismError(GCXError):
    """A vertex map does not extend to a morphism of weighted 2-complexes."""

    code = "morphism"


class CompositionError(MorphismError):
    """Morphisms are not composable."""

    code = "composition"


class ConstructionError(GCXError):
    """A categorical construction could not be materialized."""

    code = "construction"


class FactorizationError(GCXError):
    """Universal-property hypothesis violated."""

    code = "factorization"


class AdjunctionError(GCXError):
    """Transpose applied outside free complexes."""

    code = "adjunction"


class PresentationError(GCXError):
    """Malformed group presentation or relator."""

    code = "presentation"


class ResourceError(GCXError):
    """Resource exhaustion (enumeration bounds)."""

    code = "resource"


class HomSetLimitExceeded(ResourceError):
    """Too many vertex maps to enumerate."""

    code = "hom-limit"


class CosetLimitExceeded(ResourceError):
    """Coset enumeration ran past its live-coset limit."""

    code = "exceeded"

    def __init__(self, limit: int, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"exceeded({limit})", details)
        self.limit = limit


class IncompleteTableError(GCXError):
    """Operation needs a completed coset table."""

    code = "incomplete-table"


class FamilyError(GCXError):
    """Unknown family or invalid family parameters."""

    code = "family"


class DocumentError(GCXError):
    """Complex / map document could not be parsed."""

    code = "document"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details)
        self.line = line
        self.column = column

    def summary(self) -> str:
        if self.line is not None:
            return f"{self.message} (line {self.line}, column {self.column})"
        return self.message

    def __str__(self):
        if self.line is not None:
            return self.summary()
        return super().__str__()


def handle_error(error: Exception, context: str = "", log_level: str = "error") -> None:
    """
    Standardized error handling with logging and context.

    Args:
        error: The exception that occurred
        context: Additional context about where the error occurred
        log_level: Logging level ('debug', 'info', 'warning', 'error', 'critical')
    """
    error_msg = f"[{context}] {type(error).__name__}: {error}" if context else f"{type(error).__name__}: {error}"

    log_func = getattr(logger, log_level, logger.error)
    log_func(error_msg)

    if isinstance(error, GCXError) and error.details:
        logger.debug(f"[{context}] Error details: {error.details}")


def error_line(error: GCXError) -> str:
    """One-line machine-parseable rendering used on CLI stderr."""
    text = error.summary().replace("\n", " ")
    return f"error: {error.code}: {text}"
