"""Partitions, strict and odd partitions, Frobenius and interlacing coordinates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "FrobeniusCoords",
    "InterlacingCoords",
    "partition",
    "strict_partition",
    "odd_partition",
    "is_strict",
    "is_odd",
    "conjugate",
    "frobenius",
    "from_frobenius",
    "double",
    "interlacing",
    "z_factor",
    "enumerate_partitions",
    "power_sums",
    "parse_partition",
]

HALF = Fraction(1, 2)

# Partitions are plain tuples of positive ints in weakly decreasing order.
Partition = tuple


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise (drop zeros) a weakly decreasing sequence."""
    parts = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    return parts


def is_strict(lam: Sequence[int]) -> bool:
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


def is_odd(rho: Sequence[int]) -> bool:
    return all(p % 2 == 1 for p in rho)


def strict_partition(parts: Iterable[int]) -> Partition:
    lam = partition(parts)
    if not is_strict(lam):
        raise ValueError(f"{lam} has repeated parts")
    return lam


def odd_partition(parts: Iterable[int]) -> Partition:
    rho = partition(parts)
    if not is_odd(rho):
        raise ValueError(f"{rho} has an even part")
    return rho


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,2,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = sorted((int(t) for t in text.split(",")), reverse=True)
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive in {text!r}")
    return tuple(parts)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


@dataclass(frozen=True)
class FrobeniusCoords:
    """Modified Frobenius coordinates [a_1..a_d | b_1..b_d], entries in Z + 1/2."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("arm and leg sequences differ in length")
        for seq in (self.a, self.b):
            if any(x.denominator != 2 or x <= 0 for x in seq):
                raise ValueError(f"coordinates must be positive half-integers, got {seq}")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"coordinates must strictly decrease, got {seq}")

    @property
    def d(self) -> int:
        return len(self.a)

    def size(self) -> int:
        return int(sum(self.a) + sum(self.b))


def frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    lam_c = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam) if p >= i + 1)
    a = tuple(lam[i] - (i + 1) + HALF for i in range(d))
    b = tuple(lam_c[i] - (i + 1) + HALF for i in range(d))
    return FrobeniusCoords(a, b)


def from_frobenius(c: FrobeniusCoords) -> Partition:
    d = c.d
    arms = [int(x - HALF) for x in c.a]  # lam_i - i
    legs = [int(x - HALF) for x in c.b]  # lam'_i - i
    rows = [arms[i] + i + 1 for i in range(d)]
    cols = [legs[i] + i + 1 for i in range(d)]
    # rows below the Durfee square: row r > d has length #{j : lam'_j >= r}
    n_rows = cols[0] if d else 0
    for r in range(d + 1, n_rows + 1):
        rows.append(sum(1 for j in range(d) if cols[j] >= r))
    lam = tuple(rows)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or frobenius(lam) != c:
        raise ValueError(f"{c} does not describe a partition")
    return lam


def double(lam: Sequence[int]) -> Partition:
    """The double diagram D(lam) of a strict partition: [lam_i + 1/2 | lam_i - 1/2]."""
    lam = strict_partition(lam)
    return from_frobenius(
        FrobeniusCoords(tuple(p + HALF for p in lam), tuple(p - HALF for p in lam))
    )


@dataclass(frozen=True)
class InterlacingCoords:
    """Kerov minima x_1 < ... < x_r and maxima y_1 < ... < y_{r-1}."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) != len(self.y) + 1:
            raise ValueError("need exactly one more minimum than maxima")
        merged = [v for pair in zip(self.x, self.y) for v in pair] + [self.x[-1]]
        if any(merged[i] >= merged[i + 1] for i in range(len(merged) - 1)):
            raise ValueError(f"coordinates do not interlace: {self}")
        if sum(self.x) != sum(self.y):
            raise ValueError(f"sum rule violated: {self}")


def interlacing(mu: Sequence[int]) -> InterlacingCoords:
    """Minima are the contents of addable boxes, maxima those of removable boxes."""
    mu = tuple(mu)
    ext = mu + (0,)
    minima = []
    maxima = []
    for i in range(len(mu) + 1):
        row = i + 1
        if i == 0 or ext[i - 1] > ext[i]:
            minima.append(ext[i] + 1 - row)
        if i < len(mu) and ext[i] > ext[i + 1]:
            maxima.append(ext[i] - row)
    return InterlacingCoords(tuple(sorted(minima)), tuple(sorted(maxima)))


def z_factor(nu: Sequence[int]) -> int:
    out = 1
    for i, m in Counter(nu).items():
        out *= i**m * factorial(m)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, kind: str) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        if kind == "odd" and first % 2 == 0:
            continue
        nxt = first - 1 if kind == "strict" else first
        for rest in _partitions(n - first, nxt, kind):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, kind: str = "all") -> list[Partition]:
    """All partitions of n of the given kind, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind not in ("all", "strict", "odd"):
        raise ValueError(f"unknown kind {kind!r}")
    return list(_partitions(n, n, kind))


def partitions_up_to(n: int, kind: str = "all") -> Iterator[Partition]:
    for m in range(n + 1):
        yield from enumerate_partitions(m, kind)


def power_sums(lam: Sequence[int], max_subscript: int) -> dict[int, Fraction]:
    """p_k(lam) = sum lam_i^k for odd k up to ``max_subscript``."""
    if max_subscript % 2 == 0:
        raise ValueError("max_subscript must be odd")
    return {k: Fraction(sum(p**k for p in lam)) for k in range(1, max_subscript + 1, 2)}
