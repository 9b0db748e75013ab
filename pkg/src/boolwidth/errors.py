"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-contract input (bad file, bad vertex, bad order)."""


class ModelError(InputError):
    """An intersection model violates its invariants."""


class CapExceededError(RuntimeError):
    """An exact enumeration grew past its configured cap.

    ``partial`` is the number of members/classes seen when the cap tripped;
    ``where`` optionally names the cut or tree edge being evaluated.
    """

    def __init__(self, message: str, partial: int, where: object = None):
        super().__init__(message)
        self.partial = partial
        self.where = where

    def __reduce__(self):
        return type(self), (str(self), self.partial, self.where)
