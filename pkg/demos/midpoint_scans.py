"""Scanning the midpoint inequality where it is expected to hold.

In the stable ring the squared exact midpoint is conjectured to dominate the
original product. The scan below exhausts all pairs with at most six boxes
(non-integral midpoints are skipped, not errors) and finds nothing. The
padded-dimension inequality, which is a theorem, is sampled alongside.
"""

from kroncave import check_dim_log_concavity, format_partition, scan, syt_count, pad

report = scan("midpoint_reduced", 6)
print(f"scan {report.subject}")
print(f"  pairs checked: {report.pairs_scanned}, skipped (odd sums): {report.skipped}")
print(f"  violations: {len(report.violations)}  -> {'clean' if report.passed else 'FAILED'}")

print("\nsame scan, but LR coefficients at fixed total size (a theorem):")
report = scan("schur_lr", 6)
print(f"  pairs checked: {report.pairs_scanned}, violations: {len(report.violations)}")

print("\npadded dimension log-concavity, a few pairs:")
for lam, mu, d in [((3, 1), (1, 1), 8), ((4,), (2, 2), 10), ((5, 3), (3, 1), 14)]:
    r = check_dim_log_concavity(lam, mu, d)
    print(
        f"  {format_partition(lam)} vs {format_partition(mu)} at d={d}: "
        f"{r.lhs} >= {r.rhs}  ({'ok' if r.holds else 'violated'})"
    )

print("\nthe two sides at d=8 for (3,1),(1,1), spelled out:")
print(f"  midpoint (2,1) padded: count {syt_count(pad((2, 1), 8))} squared = {syt_count(pad((2,1),8))**2}")
print(f"  pair padded: {syt_count(pad((3, 1), 8))} * {syt_count(pad((1, 1), 8))} = "
      f"{syt_count(pad((3,1),8)) * syt_count(pad((1,1),8))}")
