"""Exception hierarchy shared by all conjkex modules."""


class ConjKexError(Exception):
    """Base class for every error raised by this package."""


class ParamMismatchError(ConjKexError):
    """Operands were built under different moduli or group parameters."""


class PlatformMismatchError(ParamMismatchError):
    """Protocol values from two different platforms were combined."""


class DepthMismatchError(ParamMismatchError):
    """Tree portraits of different depth were composed."""


class NotInvertibleError(ConjKexError):
    """Residue shares a factor with its modulus."""


class BoundExceededError(ConjKexError):
    """Multiplicative order exceeds the caller's stated bound."""


class NoSolutionError(ConjKexError):
    """Discrete-log target lies outside the cyclic subgroup searched."""


class NotInOrbitError(ConjKexError):
    """Brute-force conjugator scan ran out of candidates."""


class CapExceededError(ConjKexError):
    """Conjugacy class grew past the caller's cap."""


class TooLargeError(ConjKexError):
    """Group is too big for the requested exhaustive enumeration."""


class LevelOutOfRangeError(ConjKexError):
    """Level index is outside [0, depth)."""


class DepthTooLargeError(ConjKexError):
    """Tree depth exceeds the enumeration limit for this operation."""


class NotAGroupError(ConjKexError):
    """Element set is not closed under the group operation."""


class SessionStateError(ConjKexError):
    """Key-exchange session method called before its prerequisites."""


class TranscriptError(ConjKexError):
    """Handshake transcript is malformed or incomplete."""


class ParseError(ConjKexError, ValueError):
    """Canonical element string does not match its strict grammar."""
