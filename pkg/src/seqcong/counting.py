"""Brute-force enumerators and generating-function coefficients.

The enumerators are the universal test oracles for everything else in the
package: they walk partitions in reverse lexicographic order, duplicate-free,
with optional part/length caps.  Counts are plain Python integers, so they
stay exact however large the coefficients grow.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterable, Iterator

from .bijections import CNotation, from_c_notation
from .partition import Partition


def iter_partition_tuples(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All partitions of n as tuples, reverse lexicographic, largest first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(max_part, n)
    room = n if max_length is None else max_length

    def rec(remaining: int, cap: int, room: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if room == 0 or cap == 0:
            return
        lo = -(-remaining // room)  # smallest head that still fits in `room` parts
        for v in range(min(cap, remaining), lo - 1, -1):
            yield from rec(remaining - v, v, room - 1, prefix + (v,))

    yield from rec(n, cap, room, ())


def enumerate_partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order."""
    return [Partition(t) for t in iter_partition_tuples(n, max_part, max_length)]


def enumerate_with_parts_from(allowed: Iterable[int], n: int) -> list[Partition]:
    """Partitions of n using only the given part values, reverse lexicographic."""
    values = sorted({v for v in allowed if 1 <= v <= n}, reverse=True)
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, start: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for idx in range(start, len(values)):
            v = values[idx]
            if v <= remaining:
                rec(remaining - v, idx, prefix + (v,))

    rec(n, 0, ())
    return [Partition(t) for t in out]


def _iter_c_vectors(weights: list[int], total: int) -> Iterator[tuple[int, ...]]:
    """Coefficient vectors c with sum(weights[i] * c[i]) == total, trailing nonzero."""
    if total == 0:
        yield ()
        return
    for r_used in range(1, len(weights) + 1):
        # Fixing the last nonzero position keeps vectors canonical.
        w_last = weights[r_used - 1]
        for c_last in range(1, total // w_last + 1):
            rest = total - c_last * w_last
            for head in _bounded_vectors(weights[: r_used - 1], rest):
                yield head + (c_last,)


def _bounded_vectors(weights: list[int], total: int) -> Iterator[tuple[int, ...]]:
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    for c in range(total // w, -1, -1):
        for rest in _bounded_vectors(weights[1:], total - c * w):
            yield (c,) + rest


def enumerate_seqcong_by_size(n: int) -> list[Partition]:
    """Sequentially congruent partitions of size n, via square-count vectors."""
    weights = [i * i for i in range(1, n + 1) if i * i <= n]
    found = [from_c_notation(CNotation(v)) for v in _iter_c_vectors(weights, n)]
    return sorted(found, key=lambda p: p.parts, reverse=True)


def enumerate_seqcong_by_largest(n: int) -> list[Partition]:
    """Sequentially congruent partitions with largest part n."""
    weights = list(range(1, n + 1))
    found = [from_c_notation(CNotation(v)) for v in _iter_c_vectors(weights, n)]
    return sorted(found, key=lambda p: p.parts, reverse=True)


class CountSeries:
    """Coefficient prefix of a generating function, indexed from 0."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        self.coefficients = tuple(coefficients)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int], upto: int) -> "CountSeries":
        """Product of 1 / (1 - q^d) over the given degrees, coefficients 0..upto."""
        coeffs = [0] * (upto + 1)
        coeffs[0] = 1
        for d in sorted({d for d in degrees if 1 <= d <= upto}):
            for j in range(d, upto + 1):
                coeffs[j] += coeffs[j - d]
        return cls(coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, CountSeries):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __repr__(self) -> str:
        return f"CountSeries({list(self.coefficients)!r})"


_series_cache: dict[tuple, CountSeries] = {}
_series_lock = threading.Lock()


def _cached_series(key: tuple, degrees_for: Callable[[int], Iterable[int]], upto: int) -> CountSeries:
    with _series_lock:
        series = _series_cache.get(key)
        if series is None or len(series) <= upto:
            series = CountSeries.from_degrees(degrees_for(upto), upto)
            _series_cache[key] = series
        return series


def count_into_powers(n: int, k: int) -> int:
    """Number of partitions of n into perfect k-th powers (k = 1 counts all partitions)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    series = _cached_series(("powers", k), lambda m: (i**k for i in range(1, m + 1)), n)
    return series[n]


def count_all_partitions(n: int) -> int:
    return count_into_powers(n, 1)


def count_members(pred, n: int) -> int:
    """Brute-force count of partitions of n satisfying a predicate.

    ``pred`` may be a callable on Partition or anything with a ``contains``
    method, such as an IdealSpec from :mod:`seqcong.ideals`.
    """
    test = _as_predicate(pred)
    return sum(1 for t in iter_partition_tuples(n) if test(Partition(t)))


def _as_predicate(pred) -> Callable[[Partition], bool]:
    if callable(pred):
        return pred
    member = getattr(pred, "contains", None)
    if member is not None:
        return member
    raise TypeError(f"cannot interpret {pred!r} as a partition predicate")
