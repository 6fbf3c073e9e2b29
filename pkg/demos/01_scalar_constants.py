"""
Scalar constants: Specht ratio, generalized Kantorovich, difference factor
===========================================================================

The reverse inequalities in this package all pay for their direction with a
multiplicative constant.  This script walks the three scalar constants the
certifiers use and shows the structure the matrix results lean on: symmetry,
normalization, bounds, and collapse as the exponent shrinks.
"""

import math

from golden_bounds import (
    evaluate_constant,
    fm_factor,
    kantorovich,
    kantorovich_limit_root,
    kantorovich_lower_bound,
    specht,
    specht_p_root,
)

# The Specht ratio S(t) measures the worst arithmetic/geometric mean gap for
# positive scalars confined to a ratio of t.  S(1) = 1 (no spread, no gap)
# and the function is symmetric under t -> 1/t.
print("Specht ratio")
for t in (1.0, 2.0, 8.0, 10.0):
    print(f"  S({t:g})    = {specht(t):.12f}")
print(f"  S(1/8)  = {specht(1.0 / 8.0):.12f}  (equals S(8))")
print(f"  S(1.000001) = {specht(1.000001):.15f}  (series branch near 1)")
print()

# The generalized Kantorovich constant K(w, alpha) interpolates between the
# trivial value 1 at alpha in {0, 1} and the classical Kantorovich bound at
# alpha in {-1, 2}.  On the unit interval it stays between a closed-form
# floor and 1.
print("generalized Kantorovich constant")
for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"  K(4, {alpha:4.2f}) = {kantorovich(4.0, alpha):.12f}")
print(f"  floor at w=4: {kantorovich_lower_bound(4.0):.12f}  (= K(4, 1/2))")
classic = (1.0 + 4.0) ** 2 / (4.0 * 4.0)
print(f"  K(4, 2) = {kantorovich(4.0, 2.0):.12f}  vs (1+h)^2/4h = {classic:.12f}")
print()

# Both constants collapse to 1 along the small-exponent path the norm-limit
# results traverse: S(t^p)^(1/p) -> 1 and K(w^p, a)^(-1/p) -> 1.
print("small-exponent collapse")
for p in (1.0, 0.1, 0.01, 1e-4, 1e-6):
    print(f"  p = {p:<8g}  S(2^p)^(1/p) = {specht_p_root(2.0, p):.10f}")
path = kantorovich_limit_root(math.e**2, 0.5, (1.0, 0.1, 0.01, 1e-3, 1e-4))
print(f"  K(e^(2p), 1/2)^(-1/p) along p -> 0: {[f'{v:.8f}' for v in path]}")
print()

# The difference-chain factor exp(scale * a(1-a) (1 - 1/h)^2) shows up when a
# pair is ordered rather than merely sandwiched; it is always >= 1 and flat
# at the endpoints of the weight.
print("ordered-pair difference factor")
for alpha in (0.0, 0.25, 0.5, 1.0):
    print(f"  fm_factor(3, {alpha:4.2f}, 1) = {fm_factor(3.0, alpha, 1.0):.12f}")
print()

# Every constant is also reachable by name through the registry the CLI uses.
result = evaluate_constant("specht", [2.0])
print(f"registry: {result.name}{tuple(result.arguments)} = {result.value!r} "
      f"via branch '{result.branch}'")
