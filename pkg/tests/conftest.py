"""Shared oracles and strategies.

The oracles here are deliberately naive, independent reimplementations used to
cross-check the library: a textbook recursive partition generator, the direct
summation forms of the core bijections, and brute-force box filtering for the
ideal-kind enumerators.
"""

from hypothesis import strategies as st

from seqcong import CNotation, Partition, from_c_notation


def naive_partitions(n, max_part=None):
    """All partitions of n by head recursion; the enumeration oracle."""
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        return [()]
    out = []
    for head in range(cap, 0, -1):
        for rest in naive_partitions(n - head, head):
            out.append((head,) + rest)
    return out


def all_partitions_upto(n):
    """Every partition of every size up to n, as Partition values."""
    return [Partition(t) for m in range(n + 1) for t in naive_partitions(m)]


def pi_direct(p: Partition) -> Partition:
    """Row-sum form of the size-to-largest-part map: i*p_i plus the later parts."""
    r = len(p)
    return Partition(
        tuple(i * p.part(i) + sum(p.part(j) for j in range(i + 1, r + 1)) for i in range(1, r + 1))
    )


def sigma_direct(p: Partition) -> Partition:
    """Frequency form of the inverse map, one exponent per difference."""
    r = len(p)
    parts = []
    for i in range(r, 0, -1):
        exponent = (p.part(i) - p.part(i + 1)) // i
        parts.extend([i] * exponent)
    return Partition(parts)


def seqcong_with_largest_upto(n):
    """Sequentially congruent partitions with largest part at most n, via vectors."""
    out = []
    for m in range(n + 1):
        out.extend(_seqcong_largest_exactly(m))
    return out


def _seqcong_largest_exactly(m):
    found = []

    def rec(i, remaining, coeffs):
        if i == 0:
            if remaining == 0 and (not coeffs or coeffs[0]):
                found.append(from_c_notation(CNotation(reversed(coeffs))))
            return
        for c in range(remaining // i, -1, -1):
            rec(i - 1, remaining - c * i, coeffs + [c])

    rec(m, m, [])
    return found


partitions_st = st.lists(st.integers(1, 24), max_size=8).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)

seqcong_st = (
    st.lists(st.integers(0, 3), max_size=6)
    .map(lambda xs: xs + [1])
    .map(lambda xs: from_c_notation(CNotation(xs)))
)
