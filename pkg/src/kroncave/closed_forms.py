"""Closed forms for reduced Kronecker coefficients of special pairs.

Two families admit lattice-count formulas: two one-row shapes reduce to a
rectangle reachability count, and two one-column shapes to a short case split
over the target shape. Both are cross-validated against the character engine
in the test suite, which is what pins down the boundary conventions here
(sources reachable in zero steps count; parity of the walk is forced by the
step set; the characteristic conditions are plain inequalities on halves).
"""

from __future__ import annotations

from typing import NamedTuple

from .partitions import Partition, double_hook_decompose, pad, part


class ReachQuery(NamedTuple):
    """Rectangle [a, a+b] x [c, c+d] with a walk source at (x, y).

    A point (u, v) is reachable from (x, y) by unit steps south-west and
    north-west, zero steps allowed: u <= x, |v - y| <= x - u, and v - y has
    the parity of x - u.
    """

    a: int
    b: int
    c: int
    d: int
    x: int
    y: int


def _count_with_parity(lo: int, hi: int, parity: int) -> int:
    if lo > hi:
        return 0
    first = lo if lo % 2 == parity else lo + 1
    if first > hi:
        return 0
    return (hi - first) // 2 + 1


def reach_count(q: ReachQuery) -> int:
    """Lattice points of the rectangle (within N^2) reachable from the source."""
    total = 0
    for u in range(max(q.a, 0), min(q.a + q.b, q.x) + 1):
        s = q.x - u
        lo = max(q.c, q.y - s, 0)
        hi = min(q.c + q.d, q.y + s)
        total += _count_with_parity(lo, hi, (q.y + s) % 2)
    return total


def reduced_two_row(j: int, k: int, nu: Partition) -> int:
    """Reduced Kronecker coefficient of two one-row shapes (j) and (k) at nu.

    Vanishes for nu with more than 3 parts. Otherwise a single rectangle
    reach count in the stable regime; the subtracted rectangle that appears
    at finite padding sits arbitrarily high and never contributes.
    """
    if j < 0 or k < 0:
        raise ValueError("row lengths must be nonnegative")
    nu = tuple(nu)
    if len(nu) > 3:
        return 0
    if j > k:
        j, k = k, j  # the count assumes the smaller row first
    v1, v2, v3 = part(nu, 1), part(nu, 2), part(nu, 3)
    return reach_count(ReachQuery(v2 + v3, v1 - v2, v1 + v3 + 1, v2 - v3, j, k + 1))


def reduced_hook(j: int, k: int, nu: Partition) -> int:
    """Reduced Kronecker coefficient of two one-column shapes (1^j), (1^k) at nu.

    Always 0, 1, or 2. Case split on the padded target: empty, hook,
    double hook, or none of these (which forces 0). The double-hook case
    probes an explicit padding large enough that the top row plays the role
    of the unbounded part.
    """
    if j < 1 or k < 1:
        raise ValueError("column heights must be positive")
    nu = tuple(nu)
    if not nu:
        return int(j == k)
    if nu[0] == 1:
        # padded shape is a single hook with leg |nu|
        d = len(nu)
        return int(j <= d + k and d <= j + k and k <= j + d)
    probe = pad(nu, sum(nu) + max(nu[0], 3) + j + k)
    dh = double_hook_decompose(probe)
    if dh is None:
        return 0  # not contained in any double hook once padded
    half = j + k - dh.x
    first = int(2 * (dh.n3 - 1) <= half <= 2 * dh.n4 and abs(k - j) <= dh.d1)
    second = int(2 * dh.n3 <= half + 1 <= 2 * dh.n4 and abs(k - j) <= dh.d1 + 1)
    return first + second
