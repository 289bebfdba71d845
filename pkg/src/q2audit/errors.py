"""Exception hierarchy shared by every module."""


class AuditError(Exception):
    """Base class for all toolkit errors."""


class DomainError(AuditError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class CapacityError(AuditError):
    """A table-backed computation was requested for a modulus above the table limit."""


class SearchLimitError(AuditError):
    """A search for non-residues ran past its limit without finding enough."""


class HypothesisError(AuditError):
    """A lemma's hypotheses do not hold for the supplied instance.

    Kept distinct from an assertion failure: the lemma says nothing here.
    """
