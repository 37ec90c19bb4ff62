"""Exception types raised across the package."""


class DiffSchubError(Exception):
    """Base class for all package errors."""


class ParseError(DiffSchubError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at offset {position}"
        super().__init__(message)


class MalformedWord(DiffSchubError, ValueError):
    """A permutation word is not a bijection of its window."""


class NotGrassmannian(DiffSchubError, ValueError):
    """Permutation has more than one descent."""


class NonRecoverable(DiffSchubError, ValueError):
    """recover() was handed a pair that is not (xi X, nabla X) for a nonnegative X."""


class SizeMismatch(DiffSchubError, ValueError):
    pass


class InternalInconsistency(DiffSchubError, RuntimeError):
    """A self-check of the Schur x Schubert recursion failed."""


class NotSymmetric(DiffSchubError, ValueError):
    pass


class NotInSpan(DiffSchubError, ValueError):
    pass


class VersionMismatch(DiffSchubError, ValueError):
    pass


class ConflictError(DiffSchubError, ValueError):
    """Two cache entries for the same key disagree."""


class CacheIOError(DiffSchubError, OSError):
    pass
