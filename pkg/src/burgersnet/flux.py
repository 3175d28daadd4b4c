"""Convex flux functions for the scalar conservation law."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class ConvexFlux:
    """A convex flux ``F`` with derivative ``dF`` and sonic point ``sonic``
    (the minimiser of ``F``)."""

    name: str
    F: Callable
    dF: Callable
    sonic: float

    def godunov(self, uL: float, uR: float) -> float:
        """Exact Godunov flux for a convex ``F``.

        For ``uL >= uR`` this is the maximum of ``F`` over ``[uR, uL]``,
        otherwise the minimum over ``[uL, uR]``.
        """
        if uL >= uR:
            return max(self.F(uL), self.F(uR))
        if uL >= self.sonic:
            return self.F(uL)
        if uR <= self.sonic:
            return self.F(uR)
        return self.F(self.sonic)

    def godunov_array(self, uL, uR):
        uL = np.asarray(uL, dtype=float)
        uR = np.asarray(uR, dtype=float)
        fL = self.F(uL)
        fR = self.F(uR)
        shock = np.maximum(fL, fR)
        rare = np.where(uL >= self.sonic, fL,
                        np.where(uR <= self.sonic, fR, self.F(self.sonic)))
        return np.where(uL >= uR, shock, rare)


def _square(u):
    return u * u


def _twice(u):
    return 2.0 * u


BURGERS = ConvexFlux("burgers", _square, _twice, 0.0)
