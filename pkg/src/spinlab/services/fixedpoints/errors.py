from spinlab.models.profiles import FixedPoint, Permutation


class ServiceError(Exception):
    """Base class for fixed point service errors."""

    pass


class InvalidPointError(ServiceError):
    """Raised when a tuple is not a fixed point of the profile."""

    def __init__(self, point: FixedPoint, ell: tuple[int, ...]) -> None:
        super().__init__(f"{point} is not a fixed point for spins {ell}.")


class InvalidPermutationError(ServiceError):
    """Raised when a permutation does not act on the framing columns."""

    def __init__(self, sigma: Permutation, w: int) -> None:
        super().__init__(f"{sigma} is not a permutation of 1..{w}.")


class VariablesMismatchError(ServiceError):
    """Raised when the variables were built for another profile."""

    def __init__(self, spins: tuple[int, ...], ell: tuple[int, ...]) -> None:
        super().__init__(f"Variables for spins {spins} used with profile {ell}.")
