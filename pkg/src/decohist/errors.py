"""Exception types shared across the library."""


class DecohistError(Exception):
    """Base class for all library errors."""


class NotUnitaryError(DecohistError):
    """Matrix failed the unitarity check."""


class DimensionMismatchError(DecohistError):
    """Operands act on Hilbert spaces of different dimensions."""


class InvalidBlocksError(DecohistError):
    """Block index sets do not form a disjoint cover of the basis."""


class InvalidKError(DecohistError):
    """History length or generator size parameter out of range."""


class LengthMismatchError(DecohistError):
    """Histories being compared have different lengths."""


class KTooLargeError(DecohistError):
    """Surviving branch count exceeded the configured budget."""


class NoWitnessError(DecohistError):
    """The unitary preserves classicality, so no witness exists."""


class NotDecoherentError(DecohistError):
    """Probabilities requested for a history set that fails the decoherence check."""


class PartitionNotFineGrainedError(DecohistError):
    """Operation requires a partition made of rank-1 projectors only."""


class RecurrenceNotFoundError(DecohistError):
    """No step below the search bound brings the unitary close enough to the identity.

    Carries the best candidate seen during the scan.
    """

    def __init__(self, message, best_q=None, best_norm=None):
        super().__init__(message)
        self.best_q = best_q
        self.best_norm = best_norm
