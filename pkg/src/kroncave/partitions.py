"""Integer partitions and the shape operations applied to them.

Partitions are plain tuples of weakly decreasing positive ints; the empty
tuple is the empty partition. Tuples keep equality, hashing, and memo keys
cheap, which matters once character recursions start hammering these values.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import NotIntegral, PadTooSmall

Partition = tuple[int, ...]

EMPTY: Partition = ()


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize an iterable into a partition tuple.

    Trailing zeros are stripped; increasing or negative entries are rejected.
    """
    p = tuple(int(x) for x in parts)
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    p = p[:end]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"parts must be positive, got {x} at index {i}")
        if i and p[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing, got {p[i-1]} < {x}")
    return p


def part(p: Partition, i: int) -> int:
    """i-th part, 1-indexed; 0 past the end."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def canonical_key(p: Partition) -> tuple[int, Partition]:
    """Total order used everywhere results must be deterministic."""
    return (sum(p), p)


def pad(p: Partition, d: int) -> Partition:
    """Prepend a long first row so the result is a partition of d."""
    head = d - sum(p)
    first = p[0] if p else 0
    if head < first:
        raise PadTooSmall(f"need d >= {sum(p) + first} to pad {p or '()'} , got {d}")
    if head == 0:
        return p  # only possible for the empty partition
    return (head,) + p


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def midpoint(lam: Partition, mu: Partition, mode: str = "exact") -> Partition:
    """Componentwise average, with the shorter partition extended by zeros.

    mode "exact" requires every componentwise sum to be even and raises
    NotIntegral otherwise; "ceil"/"floor" round componentwise.
    """
    n = max(len(lam), len(mu))
    sums = [part(lam, i) + part(mu, i) for i in range(1, n + 1)]
    if mode == "exact":
        for i, s in enumerate(sums):
            if s % 2:
                raise NotIntegral(f"component {i + 1} sums to odd value {s}")
        halves = [s // 2 for s in sums]
    elif mode == "ceil":
        halves = [(s + 1) // 2 for s in sums]
    elif mode == "floor":
        halves = [s // 2 for s in sums]
    else:
        raise ValueError(f"unknown midpoint mode {mode!r}")
    return tuple(h for h in halves if h > 0)


def union_parts(lam: Partition, mu: Partition) -> Partition:
    """All parts of both partitions, rearranged weakly decreasing."""
    return tuple(sorted(lam + mu, reverse=True))


def sort_split(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    """Merge the parts, then deal them alternately into two partitions.

    The first output takes positions 1, 3, 5, ... of the merged sequence and
    the second takes positions 2, 4, 6, ...
    """
    u = union_parts(lam, mu)
    return u[0::2], u[1::2]


def interleave_split(lam: Partition, n: int) -> list[Partition]:
    """Split into n partitions taking every n-th part, offset by 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [lam[i::n] for i in range(n)]


def hook_lengths(p: Partition) -> list[int]:
    conj = conjugate(p)
    return [
        (p[i] - j) + (conj[j - 1] - i - 1) + 1
        for i in range(len(p))
        for j in range(1, p[i] + 1)
    ]


def syt_count(p: Partition) -> int:
    """Number of standard Young tableaux of this shape, by hook lengths.

    The division is asserted exact; a remainder would mean a bug.
    """
    total = math.factorial(sum(p))
    denom = math.prod(hook_lengths(p))
    assert total % denom == 0, f"hook product does not divide {sum(p)}!"
    return total // denom


class DoubleHookShape(NamedTuple):
    """Shape (n4, n3, 2^d2, 1^d1): two distinguished rows over a tail of 2s and 1s."""

    d1: int
    d2: int
    n3: int
    n4: int
    x: int  # 2*d2 + d1


def double_hook_decompose(p: Partition) -> DoubleHookShape | None:
    """Split off the two largest parts; succeed only if the tail is all 1s and 2s.

    Equivalently the shape has at most two parts >= 3. Returns None otherwise;
    that is a normal outcome, not an error.
    """
    tail = p[2:]
    if any(x >= 3 for x in tail):
        return None
    d2 = sum(1 for x in tail if x == 2)
    d1 = sum(1 for x in tail if x == 1)
    return DoubleHookShape(d1=d1, d2=d2, n3=part(p, 2), n4=part(p, 1), x=2 * d2 + d1)


def murnaghan_inequalities(lam: Partition, mu: Partition, nu: Partition) -> bool:
    """All three triangle inequalities on the sizes."""
    a, b, c = sum(lam), sum(mu), sum(nu)
    return a <= b + c and b <= a + c and c <= a + b


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, largest-first (lexicographically decreasing)."""
    if n == 0:
        return (EMPTY,)
    cap = n if max_part is None else min(max_part, n)
    out: list[Partition] = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(total: int) -> Iterator[Partition]:
    """All partitions of size 0..total in canonical (size, lex) order."""
    for n in range(total + 1):
        yield from sorted(partitions_of(n))
