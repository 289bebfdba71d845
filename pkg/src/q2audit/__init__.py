"""Explicit bounds on the two smallest prime non-residues of a Dirichlet
character mod p, and the machinery to audit them numerically."""

from .errors import AuditError, CapacityError, DomainError, HypothesisError, SearchLimitError

__all__ = ["AuditError", "CapacityError", "DomainError", "HypothesisError", "SearchLimitError"]
__version__ = "0.1.0"
