"""Overpartitions, partitions, and their minimal-excludant statistics.

An overpartition is a partition in which the last occurrence of a value may
carry an overline. Parts are totally ordered with each overlined value just
below its plain twin:

    1bar < 1 < 2bar < 2 < 3bar < 3 < ...

Internally a part is a (value, overlined) pair and an overpartition stores
its parts as a tuple sorted largest first in that order, so the final entry
is the smallest part. Everything in this module is exact integer counting;
generating-function coefficients are used only where enumeration would be
wasteful (large-n counts), and tests pin the two routes against each other.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import series

__all__ = [
    "Part",
    "Overpartition",
    "Partition",
    "MexQuery",
    "EnumerationCapError",
    "DEFAULT_ENUMERATION_CAP",
    "ENUMERATION_CAP_ENV",
    "enumeration_cap",
    "enumerate_overpartitions",
    "enumerate_partitions",
    "pbar",
    "partition_count",
    "overline_mex",
    "partition_mex",
    "op_class_counts",
    "op21",
    "mbar",
    "nbar",
    "mk_stat",
]


class Part(NamedTuple):
    value: int
    overlined: bool

    @property
    def rank(self) -> int:
        """Position in the total part order: 1bar=1, 1=2, 2bar=3, 2=4, ..."""
        return 2 * self.value - (1 if self.overlined else 0)

    def __str__(self) -> str:
        text = str(self.value)
        if self.overlined:
            text = "".join(ch + "̅" for ch in text)
        return text


@dataclass(frozen=True)
class Overpartition:
    """Immutable overpartition; parts sorted largest first in the part order."""

    parts: tuple[Part, ...]

    def __post_init__(self) -> None:
        seen_overlined: set[int] = set()
        prev_rank: int | None = None
        for p in self.parts:
            if not isinstance(p, Part):
                raise ValueError("parts must be Part instances")
            if p.value < 1:
                raise ValueError(f"part values must be >= 1, got {p.value}")
            if p.overlined:
                if p.value in seen_overlined:
                    raise ValueError(
                        f"value {p.value} carries more than one overline"
                    )
                seen_overlined.add(p.value)
            if prev_rank is not None and p.rank > prev_rank:
                raise ValueError("parts are not sorted largest first")
            prev_rank = p.rank

    @classmethod
    def of(cls, *parts: int | tuple[int, bool] | Part) -> "Overpartition":
        """Convenience constructor; ints are plain parts, pairs set the flag."""
        norm: list[Part] = []
        for p in parts:
            if isinstance(p, Part):
                norm.append(p)
            elif isinstance(p, int):
                norm.append(Part(p, False))
            else:
                v, ov = p
                norm.append(Part(v, bool(ov)))
        norm.sort(key=lambda p: p.rank, reverse=True)
        return cls(tuple(norm))

    @property
    def weight(self) -> int:
        return sum(p.value for p in self.parts)

    def plain_count(self, value: int) -> int:
        return sum(1 for p in self.parts if p.value == value and not p.overlined)

    def total_count(self, value: int) -> int:
        """Occurrences of a value counting overlined and plain together."""
        return sum(1 for p in self.parts if p.value == value)

    def has_overline(self, value: int) -> bool:
        return any(p.value == value and p.overlined for p in self.parts)

    def plain_values(self) -> frozenset[int]:
        return frozenset(p.value for p in self.parts if not p.overlined)

    def smallest(self) -> Part | None:
        return self.parts[-1] if self.parts else None

    def to_jsonable(self) -> list[list[int | bool]]:
        return [[p.value, p.overlined] for p in self.parts]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Partition:
    """Ordinary partition; parts sorted non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev: int | None = None
        for v in self.parts:
            if v < 1:
                raise ValueError(f"part values must be >= 1, got {v}")
            if prev is not None and v > prev:
                raise ValueError("parts are not sorted non-increasing")
            prev = v

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.parts) + ")"


@dataclass(frozen=True)
class MexQuery:
    """Arithmetic-progression minimal excludant query: residue mod modulus."""

    modulus: int
    residue: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if not (1 <= self.residue <= self.modulus):
            raise ValueError("residue must satisfy 1 <= residue <= modulus")


MEX_2_1 = MexQuery(2, 1)

DEFAULT_ENUMERATION_CAP = 30
ENUMERATION_CAP_ENV = "OPLAB_ENUM_CAP"


class EnumerationCapError(ValueError):
    """Raised when an exhaustive enumeration is asked beyond the safety cap."""

    def __init__(self, n: int, cap: int) -> None:
        super().__init__(
            f"enumeration of weight {n} exceeds the cap {cap}; raise the cap "
            f"explicitly or via the {ENUMERATION_CAP_ENV} environment variable"
        )
        self.n = n
        self.cap = cap


def enumeration_cap() -> int:
    """Active enumeration cap (environment override or the default 30)."""
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"{ENUMERATION_CAP_ENV} must be an integer, got {raw!r}"
        ) from None


def _check_cap(n: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise EnumerationCapError(n, limit)


def _value_blocks(remaining: int, max_value: int):
    """Yield ((value, count), ...) with values strictly decreasing."""
    if remaining == 0:
        yield ()
        return
    for v in range(min(remaining, max_value), 0, -1):
        for count in range(1, remaining // v + 1):
            for rest in _value_blocks(remaining - count * v, v - 1):
                yield ((v, count),) + rest


@lru_cache(maxsize=None)
def _overpartitions_of(n: int) -> tuple[Overpartition, ...]:
    result: list[Overpartition] = []
    for blocks in _value_blocks(n, n):
        for flags in itertools.product((False, True), repeat=len(blocks)):
            parts: list[Part] = []
            for (v, count), overlined in zip(blocks, flags):
                parts.extend([Part(v, False)] * (count - 1 if overlined else count))
                if overlined:
                    parts.append(Part(v, True))
            result.append(Overpartition(tuple(parts)))
    result.sort(key=lambda pi: tuple(p.rank for p in pi.parts))
    return tuple(result)


def enumerate_overpartitions(
    n: int, cap: int | None = None
) -> tuple[Overpartition, ...]:
    """All overpartitions of n in a fixed deterministic order.

    Exhaustive enumeration grows like the overpartition numbers themselves,
    so weights above the cap (default 30) are refused rather than attempted.
    """
    if n < 0:
        raise ValueError("weight must be >= 0")
    _check_cap(n, cap)
    return _overpartitions_of(n)


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    result = [
        Partition(tuple(v for v, count in blocks for _ in range(count)))
        for blocks in _value_blocks(n, n)
    ]
    result.sort(key=lambda p: p.parts)
    return tuple(result)


def enumerate_partitions(n: int, cap: int | None = None) -> tuple[Partition, ...]:
    """All ordinary partitions of n, deterministically ordered."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    _check_cap(n, cap)
    return _partitions_of(n)


# -- counting via generating functions --------------------------------------

@lru_cache(maxsize=None)
def _pbar_table(order: int) -> tuple[int, ...]:
    return series.overpartition_gf(order).coeffs


@lru_cache(maxsize=None)
def _p_table(order: int) -> tuple[int, ...]:
    return series.partition_gf(order).coeffs


def _table_order(n: int) -> int:
    order = 64
    while order < n:
        order *= 2
    return order


def pbar(n: int) -> int:
    """Number of overpartitions of n; pbar(0) = 1 and pbar(n) = 0 for n < 0."""
    if n < 0:
        return 0
    return _pbar_table(_table_order(n))[n]


def partition_count(n: int) -> int:
    """Number of ordinary partitions of n; 1 at n = 0 and 0 for n < 0."""
    if n < 0:
        return 0
    return _p_table(_table_order(n))[n]


# -- statistics --------------------------------------------------------------

def overline_mex(pi: Overpartition, query: MexQuery = MEX_2_1) -> int:
    """Smallest positive integer congruent to residue mod modulus that does
    not occur as a non-overlined part of pi. Overlined parts never block a
    candidate."""
    present = pi.plain_values()
    candidate = query.residue
    while candidate in present:
        candidate += query.modulus
    return candidate


def partition_mex(p: Partition) -> int:
    """Smallest positive integer that is not a part."""
    present = set(p.parts)
    candidate = 1
    while candidate in present:
        candidate += 1
    return candidate


def op_class_counts(
    n: int, query: MexQuery = MEX_2_1, cap: int | None = None
) -> tuple[int, int]:
    """Split pbar(n) by the residue of the overline-mex mod 2*modulus.

    The mex is always congruent to the residue mod the modulus, so mod twice
    the modulus it falls in one of exactly two classes; returns (low, high)
    where low counts mex = residue and high counts mex = residue + modulus.
    """
    ops = enumerate_overpartitions(n, cap)
    two_a = 2 * query.modulus
    low = sum(
        1 for pi in ops if overline_mex(pi, query) % two_a == query.residue % two_a
    )
    return low, len(ops) - low


@lru_cache(maxsize=None)
def _mex21_values(n: int) -> tuple[int, ...]:
    return tuple(overline_mex(pi) for pi in _overpartitions_of(n))


def op21(n: int, k: int, cap: int | None = None) -> int:
    """Count overpartitions of n whose overline-mex m (mod 2, residue 1)
    satisfies m >= 2k+1 and m = 2k+1 mod 4."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    _check_cap(n, cap)
    bound = 2 * k + 1
    target = bound % 4
    return sum(1 for m in _mex21_values(n) if m >= bound and m % 4 == target)


def mbar(n: int, k: int, cap: int | None = None) -> int:
    """Count overpartitions of n whose smallest part value above k exists and
    occurs at least k+1 times, overlined and plain occurrences together."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    _check_cap(n, cap)
    count = 0
    for pi in _overpartitions_of(n):
        above = [p.value for p in pi.parts if p.value > k]
        if not above:
            continue
        v = min(above)
        if pi.total_count(v) >= k + 1:
            count += 1
    return count


def _nbar_qualifies(pi: Overpartition, k: int) -> bool:
    parts = list(pi.parts)
    # an overlined k is exempt: set it aside before testing the rest
    for idx, p in enumerate(parts):
        if p.value == k and p.overlined:
            del parts[idx]
            break
    big = [p for p in parts if p.value >= k]
    if not big:
        return False
    smallest = min(big, key=lambda p: p.rank)
    if smallest.overlined:
        return False
    occurrences = sum(1 for p in parts if p.value == smallest.value)
    return occurrences == k


def nbar(n: int, k: int, cap: int | None = None) -> int:
    """Count overpartitions of n in which, after exempting an overlined k if
    present, the smallest remaining part of value >= k exists, is not
    overlined, and its value occurs exactly k times among the non-exempt
    parts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(n, cap)
    return sum(1 for pi in _overpartitions_of(n) if _nbar_qualifies(pi, k))


def mk_stat(n: int, k: int, cap: int | None = None) -> int:
    """Count ordinary partitions of n whose least non-part is exactly k and
    which have more parts above k than below k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(n, cap)
    count = 0
    for p in _partitions_of(n):
        if partition_mex(p) != k:
            continue
        above = sum(1 for v in p.parts if v > k)
        below = sum(1 for v in p.parts if v < k)
        if above > below:
            count += 1
    return count
