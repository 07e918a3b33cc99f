"""Which parabolas in the positive cone come from manifolds?

Membership needs three things: Q(s) positive definite for every real s,
a positive semidefinite Schur complement C - B A^{-1} B whose rank
becomes the invariant r, and enough ambient room (m + r + 2 <= n).
The two positivity conditions are genuinely independent, and kernel
directions of C split off as an s-independent block.
"""

import numpy as np

from causalcurves import (
    MatrixParabola,
    check_positive_all_s,
    is_characteristic,
    reduce_degenerate,
    schur_condition,
)

np.set_printoptions(precision=4, suppress=True)
I2 = np.eye(2)


def report(name, P, n=6):
    ok, sig = is_characteristic(P, n)
    schur = schur_condition(P)
    print(f"{name}:")
    print(f"  positive for all s : {check_positive_all_s(P)}")
    print(f"  Schur complement   : psd={schur.psd}, rank={schur.rank}")
    print(f"  characteristic at n={n}: {ok}", f"signature={sig.as_tuple()}" if ok else "")


# Positivity without the Schur condition.
report(
    "positive family, indefinite Schur matrix",
    MatrixParabola(I2, np.diag([1.0, 0.0]), [[2.0, 1.2], [1.2, 1.0]]),
)

# The Schur condition without positivity: Q(-1) = diag(0, 2) degenerates.
report(
    "Schur-admissible family that degenerates at s = -1",
    MatrixParabola(I2, np.diag([1.0, 0.0]), I2),
)

# A genuine characteristic parabola.
report("the dimension-4 normal form 1 + s^2", MatrixParabola([[1.0]], [[0.0]], [[1.0]]), n=4)

# Degenerate quadratic coefficient: one direction never moves.
P_deg = MatrixParabola(np.diag([1.0, 3.0]), np.zeros((2, 2)), np.diag([1.0, 0.0]))
red = reduce_degenerate(P_deg)
print("\nsplitting off the constant block of diag(1 + s^2, 3):")
print("  k =", red.constant_block.shape[0], " constant block =", red.constant_block.ravel())
print("  moving block: A =", red.reduced.A.ravel(), " B =", red.reduced.B.ravel(),
      " C =", red.reduced.C.ravel())
