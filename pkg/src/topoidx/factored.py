"""Exact positive rationals stored as canonical prime factorizations.

Multiplicative indices of even modest graphs have hundreds of thousands of
decimal digits, so values are kept as ``{prime: exponent}`` maps and only
expanded to decimal on request.
"""

from __future__ import annotations

import decimal
import math
import os
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Union

import numpy as np

from .errors import NegativeExponentError

DEFAULT_MAX_DIGITS = 10_000
MAX_DIGITS_ENV = "TOPOIDX_MAX_DIGITS"

_SIEVE_LIMIT = 1 << 20
_WORD_LIMIT = 1 << 64


@lru_cache(maxsize=1)
def _smallest_prime_factors() -> list[int]:
    spf = np.zeros(_SIEVE_LIMIT + 1, dtype=np.int64)
    for p in range(2, math.isqrt(_SIEVE_LIMIT) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    # untouched entries are prime
    idx = np.arange(_SIEVE_LIMIT + 1, dtype=np.int64)
    spf = np.where(spf == 0, idx, spf)
    return spf.tolist()


def _trial_division(k: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in (2, 3):
        while k % p == 0:
            out[p] = out.get(p, 0) + 1
            k //= p
    p = 5
    while p * p <= k:
        for q in (p, p + 2):
            while k % q == 0:
                out[q] = out.get(q, 0) + 1
                k //= q
        p += 6
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def _factor_dict(k: int) -> dict[int, int]:
    if k <= _SIEVE_LIMIT:
        spf = _smallest_prime_factors()
        out: dict[int, int] = {}
        while k > 1:
            p = spf[k]
            out[p] = out.get(p, 0) + 1
            k //= p
        return out
    return _trial_division(k)


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    return _factor_dict(k) == {k: 1}


def _int_to_str(n: int) -> str:
    # str(int) is capped at 4300 digits on recent CPython; split recursively.
    if n.bit_length() <= 12_000:
        return str(n)
    k = int(n.bit_length() * 0.30102999566398120) // 2
    hi, lo = divmod(n, 10**k)
    return _int_to_str(hi) + _int_to_str(lo).zfill(k)


def default_max_digits() -> int:
    raw = os.environ.get(MAX_DIGITS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DIGITS
    value = int(raw)
    if value < 1:
        raise ValueError(f"{MAX_DIGITS_ENV} must be a positive integer, got {raw!r}")
    return value


class DigitOverflow(NamedTuple):
    """Returned by :func:`to_decimal` in place of a string too long to render."""

    digits: int

    def __str__(self) -> str:
        return f"<{self.digits} digits>"


class FactoredNumber:
    """Immutable ``prime -> exponent`` map; the empty map is 1.

    Exponents may be negative, in which case the value is a positive
    rational. Zero and negative numbers are not representable.
    """

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for p, e in (factors or {}).items():
            p, e = int(p), int(e)
            if not is_prime(p):
                raise ValueError(f"factor base {p} is not prime")
            if e:
                clean[p] = e
        self._factors = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _canonical(cls, factors: dict[int, int]) -> "FactoredNumber":
        obj = cls.__new__(cls)
        obj._factors = dict(sorted((p, e) for p, e in factors.items() if e))
        obj._hash = None
        return obj

    @classmethod
    def one(cls) -> "FactoredNumber":
        return cls._canonical({})

    @classmethod
    def from_int(cls, k: int) -> "FactoredNumber":
        return factor_small(k)

    @classmethod
    def from_powers(cls, powers: Iterable[tuple[int, int]]) -> "FactoredNumber":
        """Build ``prod base**exp`` for arbitrary (not necessarily prime) bases."""
        result = cls.one()
        for base, exp in powers:
            result = result * factor_small(base) ** exp
        return result

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def items(self):
        return self._factors.items()

    def is_integer(self) -> bool:
        return all(e > 0 for e in self._factors.values())

    def __mul__(self, other: "FactoredNumber") -> "FactoredNumber":
        if not isinstance(other, FactoredNumber):
            return NotImplemented
        out = dict(self._factors)
        for p, e in other._factors.items():
            out[p] = out.get(p, 0) + e
        return FactoredNumber._canonical(out)

    def __pow__(self, e: int) -> "FactoredNumber":
        if isinstance(e, bool) or not isinstance(e, int):
            raise TypeError(f"exponent must be an int, got {type(e).__name__}")
        return FactoredNumber._canonical({p: x * e for p, x in self._factors.items()})

    def __truediv__(self, other: "FactoredNumber") -> "FactoredNumber":
        if not isinstance(other, FactoredNumber):
            return NotImplemented
        return self * other ** -1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactoredNumber):
            return self._factors == other._factors
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._factors.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"FactoredNumber({self._factors!r})"

    def __str__(self) -> str:
        return format_factors(self)

    def log10(self) -> float:
        return to_log10(self)

    def to_int(self) -> int:
        if not self.is_integer():
            raise NegativeExponentError(f"{self} is not an integer")
        n = 1
        for p, e in self._factors.items():
            n *= p**e
        return n

    def digits(self) -> int:
        return digit_count(self)

    def to_decimal(self, max_digits: int | None = None) -> Union[str, DigitOverflow]:
        return to_decimal(self, max_digits)

    def to_json(self, max_digits: int | None = None) -> dict:
        return to_json(self, max_digits)


def factor_small(k: int) -> FactoredNumber:
    """Factor a word-size positive integer.

    Uses a smallest-prime-factor table below 2**20 and 6k+-1 trial division
    above; meant for the small degree sums and products that make up index
    terms, not for general factorization.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise TypeError(f"expected an int, got {type(k).__name__}")
    k = int(k)
    if k <= 0:
        raise ValueError(f"cannot factor {k}: must be >= 1")
    if k >= _WORD_LIMIT:
        raise ValueError(f"{k} does not fit a 64-bit word")
    return FactoredNumber._canonical(_factor_dict(k))


def multiply(x: FactoredNumber, y: FactoredNumber) -> FactoredNumber:
    return x * y


def power(x: FactoredNumber, e: int) -> FactoredNumber:
    return x**e


def equals(x: FactoredNumber, y: FactoredNumber) -> bool:
    return x == y


_LOG_CTX = decimal.Context(prec=50)


@lru_cache(maxsize=4096)
def _log10_prime(p: int) -> decimal.Decimal:
    return _LOG_CTX.log10(decimal.Decimal(p))


def to_log10(x: FactoredNumber) -> float:
    """log10 of the value, summed in 50-digit decimal and rounded once."""
    ctx = _LOG_CTX
    total = decimal.Decimal(0)
    for p, e in x.items():
        total = ctx.add(total, ctx.multiply(decimal.Decimal(e), _log10_prime(p)))
    return float(total)


def _approx_log10(x: FactoredNumber) -> float:
    return math.fsum(e * math.log10(p) for p, e in x.items())


def digit_count(x: FactoredNumber) -> int:
    """Exact number of decimal digits of a positive integer value."""
    if not x.is_integer():
        raise NegativeExponentError(f"{x} has negative exponents")
    lg = _approx_log10(x)
    est = math.floor(lg) + 1
    frac = lg - math.floor(lg)
    slack = 1e-9 + abs(lg) * 1e-13
    if frac < slack or frac > 1 - slack:
        n = x.to_int()
        est = len(_int_to_str(n)) if n.bit_length() <= 400_000 else _exact_digits(n, est)
    return est


def _exact_digits(n: int, est: int) -> int:
    for d in (est - 1, est, est + 1):
        if 10 ** (d - 1) <= n < 10**d:
            return d
    raise AssertionError("digit estimate off by more than one")


def to_decimal(x: FactoredNumber, max_digits: int | None = None) -> Union[str, DigitOverflow]:
    """Render the exact decimal, or a :class:`DigitOverflow` above ``max_digits``.

    ``max_digits=None`` uses ``$TOPOIDX_MAX_DIGITS`` or 10,000.
    """
    if max_digits is None:
        max_digits = default_max_digits()
    if max_digits < 1:
        raise ValueError("max_digits must be positive")
    if not x.is_integer():
        raise NegativeExponentError(f"cannot render {x} as a decimal integer")
    nd = digit_count(x)
    if nd > max_digits:
        return DigitOverflow(nd)
    return _int_to_str(x.to_int())


def format_factors(x: FactoredNumber, sep: str = " * ") -> str:
    """``2^18 * 3^6``; the empty product renders as ``1``."""
    if not x._factors:
        return "1"
    return sep.join(f"{p}^{e}" if e != 1 else str(p) for p, e in x.items())


def to_json(x: FactoredNumber, max_digits: int | None = None) -> dict:
    out: dict = {
        "factors": {str(p): e for p, e in x.items()},
        "log10": to_log10(x),
    }
    if x.is_integer():
        rendered = to_decimal(x, max_digits)
        if isinstance(rendered, DigitOverflow):
            out["digits"] = rendered.digits
        else:
            out["digits"] = len(rendered)
            out["decimal"] = rendered
    return out
