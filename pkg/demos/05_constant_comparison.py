"""
Comparing the reverse constants against each other
==================================================

Two different routes produce reverse factors for the same inequality: the
Kantorovich route (from a sandwiched spectrum) and the ordered-difference
route.  Neither dominates — the sign of their difference flips with the
spread.  A third comparison shows the single-constant bound is never worse
than the product of two smaller ones.
"""

from golden_bounds import (
    compare_constants_remark,
    compare_seo_constants,
    compare_specht_vs_fm,
    specht_fm_sign_scan,
)

# At alpha = p = 1/2, the Kantorovich-route constant minus the
# difference-route constant is negative at h = 2 but positive at h = 8:
# which bound is sharper depends on the spread.
print("Kantorovich route vs ordered-difference route (alpha = p = 1/2)")
for h in (1.5, 2.0, 4.0, 6.0, 8.0):
    kant, fm, diff = compare_constants_remark(0.5, 0.5, h)
    better = "difference" if diff > 0 else "Kantorovich"
    print(f"  h = {h:3g}: K-route {kant:.9f}  D-route {fm:.9f}  "
          f"diff {diff:+.9f}  (sharper: {better})")
print()

# The same flip shows up between the plain Specht factor and the
# difference factor.
print("Specht factor vs difference factor")
for alpha, r, h in ((0.5, 1.0, 1.5), (0.5, 1.0, 8.0), (0.1, 1.0, 16.0)):
    s_side, f_side, diff = compare_specht_vs_fm(alpha, r, h)
    print(f"  alpha={alpha:g} r={r:g} h={h:3g}: "
          f"S-side {s_side:.6f}  D-side {f_side:.6f}  diff {diff:+.6f}")
scan = specht_fm_sign_scan()
print(f"  grid scan witnesses: positive at {scan['positive'][:3]}, "
      f"negative at {scan['negative'][:3]}")
print()

# A two-sided spectral bound can be spent once (one constant on the wide
# interval) or twice (a product of two constants).  The single constant
# always wins: the ratio never exceeds 1.
print("single constant vs product of two (ratio <= 1)")
for alpha, p, m, M in ((0.5, 0.5, -0.5, 0.5), (0.3, 1.0, -1.0, 0.2),
                       (0.8, 0.25, 0.0, 1.5)):
    new, product, ratio = compare_seo_constants(alpha, p, m, M)
    print(f"  alpha={alpha:g} p={p:g} [m,M]=[{m:g},{M:g}]: "
          f"single {new:.9f}  product {product:.9f}  ratio {ratio:.9f}")
