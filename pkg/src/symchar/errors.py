"""Exception kinds shared across the package.

The split matters to the CLI: domain errors exit 2, resource-budget
refusals exit 3, and internal consistency failures are genuine bugs and
are allowed to propagate as ordinary tracebacks.
"""


class SymcharError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"


class DomainError(SymcharError):
    """Input is outside the mathematical domain of the operation."""

    kind = "domain-error"


class SizeMismatchError(DomainError):
    """Character label and class label are partitions of different weights."""

    kind = "size-mismatch"


class UnsupportedCharacteristicError(DomainError):
    """The requested field characteristic is not covered (p = 2)."""

    kind = "unsupported-characteristic"


class ResourceBudgetError(SymcharError):
    """The request exceeds the documented desk-scale budget.

    Raised instead of silently truncating; the caller can retry with a
    smaller instance or accept the cost via a different entry point.
    """

    kind = "resource-budget"


class ConsistencyError(SymcharError):
    """An internal cross-check failed; indicates a bug, not bad input."""

    kind = "internal-consistency"


class CacheError(SymcharError):
    """Base class for character-table cache problems."""

    kind = "cache-error"


class CacheMissError(CacheError):
    """No cache file exists for the requested table."""

    kind = "cache-miss"


class CacheCorruptError(CacheError):
    """Cache file is unreadable or structurally invalid."""

    kind = "cache-corrupt"


class CacheVersionError(CacheError):
    """Cache file has a valid shape but the wrong format version."""

    kind = "cache-version"


class CacheChecksumError(CacheError):
    """Cache file checksum does not match its payload."""

    kind = "cache-checksum"
