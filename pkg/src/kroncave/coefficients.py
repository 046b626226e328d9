"""The three coefficient families and the stable representation ring.

Kronecker coefficients are exact class-weighted character sums; the n!
division is done once per query with a divisibility assertion so arithmetic
bugs fail loudly instead of rounding. Littlewood-Richardson coefficients count
skew tableaux by depth-first construction with lattice pruning. Reduced
Kronecker coefficients are the stable values of padded Kronecker sequences,
detected by a plateau protocol:

  start at d0 = max(|lam|+lam1, |mu|+mu1, |nu|+nu1, |lam|+|mu|+|nu|), step d
  upward, and accept as soon as `window` consecutive values agree (default 2).
  Beyond the hard cap d0 + 2*(|lam|+|mu|+|nu|) + 2 the computation refuses to
  answer (StabilizationNotDetected) rather than guess.

Padded sequences are weakly increasing, which the engine also asserts on every
trace; a decrease is an implementation bug, never data.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .characters import CharacterTable, DEFAULT_TABLE, cycle_types
from .errors import SizeMismatch, StabilizationNotDetected
from .partitions import (
    EMPTY,
    Partition,
    canonical_key,
    murnaghan_inequalities,
    pad,
    part,
    partitions_of,
)

DEFAULT_WINDOW = 2

# (lam, mu) -> [(cycle parts, class_size * chi_lam * chi_mu), ...] nonzero only.
# Values are table-independent exact integers, so one shared store is safe.
_PAIR_WEIGHTS: dict = {}
# (pair key, nu, window, cap) -> stable value
_REDUCED_MEMO: dict = {}
# (pair key, window, cap) -> VirtualStableRep coefficient dict
_STABLE_PRODUCTS: dict = {}


def clear_caches() -> None:
    """Drop every in-process memo (character table included)."""
    _PAIR_WEIGHTS.clear()
    _REDUCED_MEMO.clear()
    _STABLE_PRODUCTS.clear()
    DEFAULT_TABLE.clear()
    cycle_types.cache_clear()


def _pair_weights(lam: Partition, mu: Partition, table: CharacterTable):
    key = (lam, mu) if lam <= mu else (mu, lam)
    hit = _PAIR_WEIGHTS.get(key)
    if hit is not None:
        return hit
    a, b = key
    same = a == b
    out = []
    for ct in cycle_types(sum(a)):
        xa = table.character(a, ct)
        if xa == 0:
            continue
        xb = xa if same else table.character(b, ct)
        if xb == 0:
            continue
        out.append((ct.parts, ct.class_size * xa * xb))
    _PAIR_WEIGHTS[key] = out
    return out


def kronecker(
    lam: Partition, mu: Partition, nu: Partition, *, table: CharacterTable | None = None
) -> int:
    """Multiplicity of nu in the symmetric group tensor product lam (x) mu."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise SizeMismatch(f"sizes differ: {sum(lam)}, {sum(mu)}, {sum(nu)}")
    table = table or DEFAULT_TABLE
    total = 0
    for parts, weight in _pair_weights(lam, mu, table):
        x = table.character(nu, parts)
        if x:
            total += weight * x
    fact = math.factorial(n)
    assert total % fact == 0, f"non-integral character sum for {lam},{mu},{nu}"
    value = total // fact
    assert value >= 0, f"negative multiplicity for {lam},{mu},{nu}"
    return value


class VirtualRep:
    """Finite integer combination of irreducibles of a fixed S_n.

    Negative coefficients are allowed (virtual characters); zero coefficients
    are never stored.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict[Partition, int] | None = None):
        self.n = n
        cleaned = {}
        for p, c in (coeffs or {}).items():
            if sum(p) != n:
                raise SizeMismatch(f"{p} is not a partition of {n}")
            if c:
                cleaned[p] = c
        self.coeffs = cleaned

    def __getitem__(self, p: Partition) -> int:
        return self.coeffs.get(tuple(p), 0)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: canonical_key(kv[0]))

    def _combine(self, other: "VirtualRep", sign: int) -> "VirtualRep":
        if self.n != other.n:
            raise SizeMismatch(f"cannot combine S_{self.n} with S_{other.n}")
        merged = dict(self.coeffs)
        for p, c in other.coeffs.items():
            merged[p] = merged.get(p, 0) + sign * c
        return VirtualRep(self.n, merged)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __eq__(self, other):
        return (
            isinstance(other, VirtualRep)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"VirtualRep(n={self.n}, {dict(self.items())!r})"


def tensor_decompose(
    lam: Partition, mu: Partition, *, table: CharacterTable | None = None
) -> VirtualRep:
    """Full decomposition of the S_n tensor product lam (x) mu."""
    n = sum(lam)
    if sum(mu) != n:
        raise SizeMismatch(f"sizes differ: {sum(lam)} vs {sum(mu)}")
    table = table or DEFAULT_TABLE
    weights = _pair_weights(lam, mu, table)
    fact = math.factorial(n)
    coeffs = {}
    for nu in partitions_of(n):
        total = 0
        for parts, weight in weights:
            x = table.character(nu, parts)
            if x:
                total += weight * x
        assert total % fact == 0
        value = total // fact
        assert value >= 0
        if value:
            coeffs[nu] = value
    return VirtualRep(n, coeffs)


def _contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: skew tableaux of shape nu/lam, content mu.

    Cells are filled in reverse reading order (each row right to left, top
    row first) so row weakness, column strictness, and the lattice property
    of the reading word can all prune each placement.
    """
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if not _contains(nu, lam) or not _contains(nu, mu):
        return 0
    if not mu:
        return 1  # nu == lam forced by the size and containment checks
    rows = len(nu)
    width = nu[0]
    inner = [part(lam, i) for i in range(1, rows + 1)]
    cells = [
        (r, c) for r in range(rows) for c in range(nu[r] - 1, inner[r] - 1, -1)
    ]
    values = len(mu)
    remaining = list(mu)
    counts = [0] * (values + 1)
    grid = [[0] * width for _ in range(rows)]  # 0 marks unfilled / inner cells

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < nu[r] else values
        above = grid[r - 1][c] if r > 0 and c >= inner[r - 1] else 0
        total = 0
        for v in range(above + 1, right + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice prefix would break
            remaining[v - 1] -= 1
            counts[v] += 1
            grid[r][c] = v
            total += place(idx + 1)
            grid[r][c] = 0
            counts[v] -= 1
            remaining[v - 1] += 1
        return total

    return place(0)


def kostka(lam: Partition, mu: Partition) -> int:
    """Weight multiplicity: semistandard tableaux of shape lam and content mu.

    Computed through the LR identity with nu_i the suffix sums of mu and
    kappa the same sums shifted by one row.
    """
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"sizes differ: {sum(lam)} vs {sum(mu)}")
    n = len(mu)
    nu = tuple(sum(mu[j] for j in range(i, n)) for i in range(n))
    kappa = tuple(
        s for s in (sum(mu[j] for j in range(i + 1, n)) for i in range(n)) if s > 0
    )
    return lr_coefficient(kappa, lam, nu)


def stabilization_start(lam: Partition, mu: Partition, nu: Partition) -> int:
    return max(
        sum(lam) + part(lam, 1),
        sum(mu) + part(mu, 1),
        sum(nu) + part(nu, 1),
        sum(lam) + sum(mu) + sum(nu),
    )


def stabilization_cap(lam: Partition, mu: Partition, nu: Partition) -> int:
    return stabilization_start(lam, mu, nu) + 2 * (sum(lam) + sum(mu) + sum(nu)) + 2


def kronecker_sequence(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    d_values: Iterable[int],
    *,
    table: CharacterTable | None = None,
) -> list[int]:
    """Padded Kronecker coefficients over the given d values."""
    return [
        kronecker(pad(lam, d), pad(mu, d), pad(nu, d), table=table) for d in d_values
    ]


def reduced_kronecker(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    *,
    window: int | None = None,
    cap: int | None = None,
    table: CharacterTable | None = None,
    cache=None,
) -> int:
    """Stable value of the padded Kronecker sequence for this triple.

    Returns 0 immediately when the size triangle inequalities fail. Otherwise
    runs the plateau protocol documented in the module docstring. A persistent
    cache object (see kroncave.store) may be supplied; only protocol-default
    runs are memoized in process.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if not murnaghan_inequalities(lam, mu, nu):
        return 0
    window = DEFAULT_WINDOW if window is None else window
    if window < 2:
        raise ValueError("window must be at least 2")
    pair = (lam, mu) if lam <= mu else (mu, lam)
    hard_cap = stabilization_cap(lam, mu, nu) if cap is None else cap
    key = (pair, nu, window, hard_cap)
    hit = _REDUCED_MEMO.get(key)
    if hit is not None:
        if cache is not None:
            cache.put("redkron", pair[0], pair[1], nu, hit)
        return hit
    if cache is not None:
        stored = cache.get("redkron", pair[0], pair[1], nu)
        if stored is not None:
            _REDUCED_MEMO[key] = stored
            return stored
    d0 = stabilization_start(lam, mu, nu)
    streak = 0
    prev = None
    for d in range(d0, hard_cap + 1):
        value = kronecker(pad(lam, d), pad(mu, d), pad(nu, d), table=table)
        if prev is not None:
            assert value >= prev, f"padded sequence decreased for {lam},{mu},{nu}"
        streak = streak + 1 if value == prev else 1
        prev = value
        if streak >= window:
            _REDUCED_MEMO[key] = value
            if cache is not None:
                cache.put("redkron", pair[0], pair[1], nu, value)
            return value
    raise StabilizationNotDetected(
        f"no plateau of length {window} for {lam},{mu},{nu} up to d={hard_cap}"
    )


class VirtualStableRep:
    """Finite integer combination of stable classes, one per partition.

    Keys of any sizes may be mixed; products are governed by reduced Kronecker
    coefficients, under which the class of the empty partition is the unit.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, int] | None = None):
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c}

    @classmethod
    def single(cls, p: Partition, coeff: int = 1) -> "VirtualStableRep":
        return cls({tuple(p): coeff})

    def __getitem__(self, p: Partition) -> int:
        return self.coeffs.get(tuple(p), 0)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: canonical_key(kv[0]))

    def _combine(self, other: "VirtualStableRep", sign: int) -> "VirtualStableRep":
        merged = dict(self.coeffs)
        for p, c in other.coeffs.items():
            merged[p] = merged.get(p, 0) + sign * c
        return VirtualStableRep(merged)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, other):
        return stable_ring_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, VirtualStableRep) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"VirtualStableRep({dict(self.items())!r})"


def reduced_tensor_decompose(
    lam: Partition,
    mu: Partition,
    *,
    window: int | None = None,
    cap: int | None = None,
    table: CharacterTable | None = None,
    cache=None,
) -> VirtualStableRep:
    """Stable product of two single classes, expanded over all partitions.

    Support is finite: coefficients vanish outside sizes |nu| <= |lam|+|mu|
    satisfying the triangle inequalities, so those candidates are enumerated
    and filtered before any character work.
    """
    lam, mu = tuple(lam), tuple(mu)
    pair = (lam, mu) if lam <= mu else (mu, lam)
    window_r = DEFAULT_WINDOW if window is None else window
    key = (pair, window_r, cap)
    hit = _STABLE_PRODUCTS.get(key)
    if hit is not None:
        return VirtualStableRep(hit)
    coeffs = {}
    for size in range(sum(lam) + sum(mu) + 1):
        for nu in sorted(partitions_of(size)):
            if not murnaghan_inequalities(lam, mu, nu):
                continue
            value = reduced_kronecker(
                lam, mu, nu, window=window, cap=cap, table=table, cache=cache
            )
            assert value >= 0
            if value:
                coeffs[nu] = value
    _STABLE_PRODUCTS[key] = coeffs
    return VirtualStableRep(coeffs)


def stable_ring_multiply(
    a: VirtualStableRep,
    b: VirtualStableRep,
    *,
    window: int | None = None,
    cap: int | None = None,
    table: CharacterTable | None = None,
    cache=None,
) -> VirtualStableRep:
    """Bilinear extension of the single-class stable product."""
    out: dict[Partition, int] = {}
    for p, cp in a.items():
        for q, cq in b.items():
            block = reduced_tensor_decompose(
                p, q, window=window, cap=cap, table=table, cache=cache
            )
            factor = cp * cq
            for nu, g in block.coeffs.items():
                out[nu] = out.get(nu, 0) + factor * g
    return VirtualStableRep(out)


class CompareResult(NamedTuple):
    """Sign classification of a - b with the partitions witnessing each sign."""

    verdict: str  # "equal" | "A>=B" | "B>=A" | "incomparable"
    negative: dict  # nu -> (a-b)[nu] < 0, the witnesses against A >= B
    positive: dict  # nu -> (a-b)[nu] > 0, the witnesses against B >= A


def stable_ring_compare(a: VirtualStableRep, b: VirtualStableRep) -> CompareResult:
    diff = a - b
    negative = {p: c for p, c in diff.items() if c < 0}
    positive = {p: c for p, c in diff.items() if c > 0}
    if not negative and not positive:
        verdict = "equal"
    elif not negative:
        verdict = "A>=B"
    elif not positive:
        verdict = "B>=A"
    else:
        verdict = "incomparable"
    return CompareResult(verdict, negative, positive)
