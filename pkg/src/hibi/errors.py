"""Exception hierarchy shared by every module.

Each error carries an optional ``witness`` so the CLI can name the
offending elements.
"""


class HibiError(Exception):
    exit_code = 2

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidInput(HibiError):
    """Raised for malformed lattices, subsets or descriptors."""


class CycleDetected(InvalidInput):
    pass


class UnknownElement(InvalidInput):
    pass


class DuplicateElement(InvalidInput):
    pass


class NotBounded(InvalidInput):
    pass


class NotGraded(InvalidInput):
    pass


class NotALattice(InvalidInput):
    pass


class NotDistributive(InvalidInput):
    pass


class NotACover(InvalidInput):
    pass


class NotEmbedded(InvalidInput):
    pass


class NotOnVariety(InvalidInput):
    pass


class GammaNotMaximalChain(InvalidInput):
    pass


class BadDescriptor(InvalidInput):
    pass


class LatticeMismatch(InvalidInput):
    pass


class LimitExceeded(HibiError):
    exit_code = 3


class InternalError(HibiError):
    """An invariant that the theory guarantees was violated."""

    exit_code = 4
