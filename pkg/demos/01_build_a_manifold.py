"""Build unipotent manifold data and watch the affine action move points.

The smallest interesting example lives in dimension 4: one lattice
generator, structure map sending the single T-direction into R.  We
print the generator's linear part, its translation part, and a few
orbit points, then do the same for a member of the five-dimensional
family.
"""

import numpy as np

from causalcurves import (
    example_4d,
    example_5d,
    gamma_apply,
    lambda_of,
    signature_of,
    tau_of,
)

np.set_printoptions(precision=4, suppress=True)

M = example_4d()
print("dimension-4 manifold")
print("  signature (n, m, r, k):", signature_of(M).as_tuple())
print("  a' =", M.a_prime.ravel(), " a'' =", M.a_dblprime.ravel())

x = np.array([1.0])  # the lattice generator, in T-coordinates
print("\nlinear part lambda(x):")
print(lambda_of(M, x))
print("translation part tau(x):", tau_of(M, x))

v = np.zeros(4)
print("\norbit of the origin under the generator:")
for step in range(4):
    print(f"  gamma^{step}(0) =", v)
    v = gamma_apply(M, x, v)

# The orbit drifts along T while picking up v0-components; the v1
# coordinate (the last one) never moves: hyperplanes l0 = const are
# invariant.

M5 = example_5d(t=1.0, r=2.0)
print("\ndimension-5 manifold, parameters t=1, r=2")
print("  signature:", signature_of(M5).as_tuple())
print("  a' =\n", M5.a_prime)
print("  a'' =", M5.a_dblprime)

v = M5.frame.v1.copy()  # a point at height l0 = 1
print("\none step of each generator applied to v1:")
for i, gen in enumerate(np.eye(2)):
    print(f"  gamma_e{i + 1}(v1) =", gamma_apply(M5, gen, v))
