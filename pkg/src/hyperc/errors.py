"""Exception types shared across the package."""


class HypercError(Exception):
    """Base class for all domain errors raised by this package."""


class AlphabetMismatch(HypercError):
    """Operands do not share an alphabet, or a symbol set leaves the alphabet."""


class SignatureMismatch(HypercError):
    """An io-signature precondition is violated (shared outputs, I ⊄ I', ...)."""


class ValidationError(HypercError):
    """A value fails its construction invariant; the message names a witness."""


class QuotientUndefined(HypercError):
    """The receptive quotient's definedness condition L' ∩ I_r* ⊆ L fails."""


class UniverseTooLarge(HypercError):
    """A behavior universe exceeds the bitset or general-mode bound."""


class LimitExceeded(HypercError):
    """A configured size cap (enumeration length, state count) was exceeded."""


class DocumentError(HypercError):
    """A JSON input document is malformed or violates its schema."""
