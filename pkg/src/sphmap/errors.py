"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: SpecInvalid/ParseError -> 2,
CapExceeded -> 3, verification failures -> 4.
"""


class SphmapError(Exception):
    """Base class for all package errors."""


class ParseError(SphmapError):
    """Malformed manifold/lens/homomorphism literal."""


class SpecInvalid(SphmapError):
    """Group specification violates a family constraint."""


class CapExceeded(SphmapError):
    """Requested computation exceeds the configured group-order cap."""


class ClosureMismatch(SphmapError):
    """Matrix closure produced a group of unexpected order.

    Signals a fingerprint-tolerance failure rather than a user error.
    """


class NotNormal(SphmapError):
    """Quotient requested by a non-normal subgroup."""


class NotCyclic(SphmapError):
    """Lens-space data requested for a non-cyclic subgroup."""


class AngleNotCommensurate(SphmapError):
    """Rotation angle of a group element is not a multiple of 2*pi/|H|.

    Defect signal: finite free actions always have commensurate angles.
    """


class ConstraintViolated(SphmapError):
    """No homomorphism exists for the requested exponent (l*m1 != 0 mod m2)."""


class RelationViolated(SphmapError):
    """Generator images do not satisfy a defining relation."""

    def __init__(self, relation: str):
        super().__init__(f"relation violated: {relation}")
        self.relation = relation


class NoFactorization(SphmapError):
    """Surjection does not factor through any registered standard entry."""


class UnregisteredFamily(SphmapError):
    """No degree table is registered for this (domain, codomain) pair."""


class Inconsistent(SphmapError):
    """Table-computed degree violates an independently derived congruence."""


class InconsistentSystem(SphmapError):
    """Congruence system has no solution (table or lens-identification defect)."""


class Underdetermined(SphmapError):
    """Congruence assembly leaves more than one candidate degree."""

    def __init__(self, message: str, homs=None):
        super().__init__(message)
        self.homs = homs or []


class DecompositionFailed(SphmapError):
    """Outer class is not a word in the registered generators (defect)."""


class Ambiguous(SphmapError):
    """Classification fingerprint collision unresolved by isomorphism search."""


class UnknownTable(SphmapError):
    """verify_table called with an unregistered table id."""
