"""Parameter records for the two graph families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidParameterError


def _check_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"{name} must be an integer, got {value!r}")


@dataclass(frozen=True)
class Pah:
    """PAH_n: ``n`` rings of hexagons around a central one, hydrogens as leaves."""

    n: int

    def __post_init__(self):
        _check_int("n", self.n)
        if self.n < 1:
            raise InvalidParameterError(f"n must be >= 1, got {self.n}")

    @property
    def label(self) -> str:
        return f"PAH_{self.n}"

    def params(self) -> dict[str, int]:
        return {"n": self.n}


@dataclass(frozen=True)
class Benzenoid:
    """B_{m,n}: n+1 rows of m-1 hexagons interleaved with n rows of m hexagons.

    ``m >= 3`` is required: the boundary counting behind the closed forms
    assumes ``2m - 6 >= 0``.
    """

    m: int
    n: int

    def __post_init__(self):
        _check_int("m", self.m)
        _check_int("n", self.n)
        if self.m < 3:
            raise InvalidParameterError(f"m must be >= 3, got {self.m}")
        if self.n < 1:
            raise InvalidParameterError(f"n must be >= 1, got {self.n}")

    @property
    def label(self) -> str:
        return f"B_{{{self.m},{self.n}}}"

    def params(self) -> dict[str, int]:
        return {"m": self.m, "n": self.n}


Family = Union[Pah, Benzenoid]
