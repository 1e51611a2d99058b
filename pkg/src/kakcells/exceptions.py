"""Exception types raised by kakcells."""


class KakError(Exception):
    """Base class for all kakcells errors."""


class NotUnitary(KakError, ValueError):
    """Input matrix fails the unitarity check."""


class NotLocal(KakError, ValueError):
    """Matrix is not a tensor product of two single-qubit operators."""


class NotInAlgebra(KakError, ValueError):
    """Matrix is not a traceless anti-Hermitian element of su(4)."""


class OutOfCell(KakError, ValueError):
    """Coordinates do not lie in the requested fundamental cell."""


class DegenerateRecovery(KakError, ArithmeticError):
    """Eigenvector pairing failed even after perturbation retries."""


class MalformedInput(KakError, ValueError):
    """Serialized input does not follow the documented schema."""
