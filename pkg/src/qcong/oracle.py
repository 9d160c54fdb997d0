"""Brute-force overpartition counting, independent of the series engine.

Two paths: a memoized weighted-partition count (each distinct part size
contributes a factor 2 for its overlinable first occurrence), and a fully
explicit enumeration that places overline marks one by one.  The explicit
path exists to validate the 2^{distinct} shortcut, the shortcut validates
the generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .etaq import BiregularSpec, biregular_gf
from .series import ZZ

EXPLICIT_ENUMERATION_CAP = 25


def _weighted_count(n: int, parts: Sequence[int]) -> int:
    """Sum over partitions of n into ``parts`` of 2^{number of distinct parts}."""

    @lru_cache(maxsize=None)
    def rec(remaining: int, idx: int) -> int:
        if remaining == 0:
            return 1
        if idx < 0:
            return 0
        total = rec(remaining, idx - 1)  # part not used at all
        p = parts[idx]
        mult = remaining // p
        for j in range(1, mult + 1):
            # j copies of p; the first copy may carry an overline: factor 2
            total += 2 * rec(remaining - j * p, idx - 1)
        return total

    result = rec(n, len(parts) - 1)
    rec.cache_clear()
    return result


def count_biregular(spec: BiregularSpec, n: int) -> int:
    """Number of (l1,l2)-biregular overpartitions of n, counted exactly."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    parts = [p for p in range(1, n + 1) if spec.allows_part(p)]
    return _weighted_count(n, parts)


def count_overpartitions(n: int) -> int:
    """Unrestricted overpartition count via the 2^{distinct} shortcut."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _weighted_count(n, list(range(1, n + 1)))


def _partitions(n: int, max_part: int, allowed: Callable[[int], bool]):
    """Yield partitions of n (non-increasing tuples) over allowed parts."""
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        if not allowed(p):
            continue
        for rest in _partitions(n - p, p, allowed):
            yield (p,) + rest


def _explicit_count(n: int, allowed: Callable[[int], bool]) -> int:
    # Walk every concrete marked object: a partition plus a choice, for
    # each distinct part size, of whether its first copy is overlined.
    count = 0
    for partition in _partitions(n, n, allowed):
        distinct = sorted(set(partition))
        for mask in range(1 << len(distinct)):
            count += 1  # each mask is one distinct overpartition
    return count


def count_overpartitions_explicit(n: int, spec: BiregularSpec | None = None) -> int:
    """Overpartition count by explicit overline placement (no 2^k shortcut).

    Exponential; capped at n <= 25.  With ``spec`` given, parts divisible
    by either modulus are excluded.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > EXPLICIT_ENUMERATION_CAP:
        raise ValueError(
            f"explicit enumeration capped at n <= {EXPLICIT_ENUMERATION_CAP}, got {n}"
        )
    allowed = spec.allows_part if spec is not None else (lambda p: True)
    return _explicit_count(n, allowed)


@dataclass(frozen=True)
class OracleComparison:
    spec: BiregularSpec
    n_max: int
    mismatches: tuple[tuple[int, int, int], ...]  # (n, series value, oracle value)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:
        return self.ok


def compare_series_vs_oracle(spec: BiregularSpec, n_max: int = 40) -> OracleComparison:
    """Check generating-function coefficients against brute-force counts."""
    series = biregular_gf(spec, n_max, ZZ)
    mismatches = []
    for n in range(n_max + 1):
        expected = count_biregular(spec, n)
        got = series[n]
        if got != expected:
            mismatches.append((n, got, expected))
            break  # first mismatch aborts; both values reported
    return OracleComparison(spec, n_max, tuple(mismatches))
