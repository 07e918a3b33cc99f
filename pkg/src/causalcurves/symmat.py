"""Self-contained dense linear algebra for small symmetric matrices.

Everything downstream (positivity of matrix parabolas, Schur criteria,
reconstruction) reduces to eigenvalues of symmetric matrices of order
m <= ~10 and to real-root counting of scalar polynomials of degree
<= 2m.  Matrices are plain float ndarrays; polynomials are coefficient
arrays in ascending degree order (numpy's polynomial convention).

The eigensolver is a cyclic Jacobi iteration rather than LAPACK: at
these sizes robustness and auditability beat speed, and the tests keep
``numpy.linalg.eigh`` around as an independent cross-check.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NotPSD,
    ZeroPolynomial,
)

#: Relative tolerance used by every predicate unless overridden per call.
DEFAULT_TOL = 1e-9

_JACOBI_SWEEP_CAP = 100
_JACOBI_OFF_REL = 1e-13
_COEFF_TRIM_REL = 1e-10
_STURM_PRUNE_REL = 1e-12


class EigenDecomposition(NamedTuple):
    """Eigenvalues in ascending order and orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def as_square(S, name="matrix"):
    """Return ``S`` as a float array, insisting it is square 2-D."""
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise DimensionMismatch(f"{name} must be square 2-D, got shape {S.shape}")
    return S


def symmetrize(S):
    """Exactly symmetric copy of a square matrix: (S + S^T)/2."""
    S = as_square(S)
    return 0.5 * (S + S.T)


def max_norm(S):
    """Largest absolute entry; the scale used by relative tolerances."""
    S = np.asarray(S, dtype=float)
    return 0.0 if S.size == 0 else float(np.max(np.abs(S)))


def _offdiag_norm(a):
    return float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))


def _jacobi_sweep(a, v):
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            if abs(tau) > 1e150:
                t = 0.5 / tau  # asymptotic rotation; tau*tau would overflow
            elif tau >= 0.0:
                t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
            else:
                t = 1.0 / (tau - np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # A <- J^T A J with J the rotation in the (p, q) plane.
            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c * ap - s * aq
            a[q, :] = s * ap + c * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq


def sym_eig(S, max_sweeps=_JACOBI_SWEEP_CAP):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below
    1e-13 * ||S||_F, capped at ``max_sweeps`` full sweeps.
    """
    S = symmetrize(S)
    n = S.shape[0]
    a = S.copy()
    v = np.eye(n)
    thresh = _JACOBI_OFF_REL * np.linalg.norm(S, "fro")
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= thresh:
            break
        _jacobi_sweep(a, v)
    if _offdiag_norm(a) > thresh:
        raise ConvergenceFailure(
            f"Jacobi iteration did not converge within {max_sweeps} sweeps"
        )
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values[order], v[:, order])


def is_pd(S, tol=DEFAULT_TOL):
    """Strict positive definiteness: min eigenvalue > tol * (1 + max|S|).

    Verdicts inside the tolerance band resolve to False; boundary cases
    never count as definite.
    """
    S = symmetrize(S)
    if S.size == 0:
        return True
    values, _ = sym_eig(S)
    return bool(values[0] > tol * (1.0 + max_norm(S)))


def is_psd(S, tol=DEFAULT_TOL):
    """Positive semidefiniteness: min eigenvalue >= -tol * (1 + max|S|)."""
    S = symmetrize(S)
    if S.size == 0:
        return True
    values, _ = sym_eig(S)
    return bool(values[0] >= -tol * (1.0 + max_norm(S)))


def psd_sqrt(S, tol=DEFAULT_TOL):
    """Nonnegative square root of a PSD matrix.

    Eigenvalues in [-tol*scale, 0) are clamped to zero; anything more
    negative raises :class:`NotPSD`.
    """
    S = symmetrize(S)
    values, vectors = sym_eig(S)
    floor = -tol * (1.0 + max_norm(S))
    if values[0] < floor:
        raise NotPSD(
            f"matrix has negative eigenvalue {values[0]:.3e} beyond tolerance"
        )
    clamped = np.clip(values, 0.0, None)
    return symmetrize(vectors @ np.diag(np.sqrt(clamped)) @ vectors.T)


def pd_inv_sqrt(S, tol=DEFAULT_TOL):
    """Inverse square root of a positive definite matrix.

    Returns None when S has an eigenvalue inside the singularity band
    |lambda| <= tol * (1 + max|S|); raises :class:`NotPSD` when S has a
    genuinely negative eigenvalue.  Callers translate None into their
    own singularity error (SingularA, CSingular, ...).
    """
    S = symmetrize(S)
    values, vectors = sym_eig(S)
    band = tol * (1.0 + max_norm(S))
    if np.min(np.abs(values)) <= band:
        return None
    if values[0] < 0.0:
        raise NotPSD(
            f"matrix has negative eigenvalue {values[0]:.3e}; no real inverse root"
        )
    return symmetrize(vectors @ np.diag(values ** -0.5) @ vectors.T)


def rank_tol(S, tol=DEFAULT_TOL):
    """Number of eigenvalues with |lambda| > tol * (1 + max|S|)."""
    S = symmetrize(S)
    if S.size == 0:
        return 0
    values, _ = sym_eig(S)
    return int(np.sum(np.abs(values) > tol * (1.0 + max_norm(S))))


def congruence(S, X):
    """X^T S X, re-symmetrized.  X may be rectangular (m x p)."""
    S = symmetrize(S)
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != S.shape[0]:
        raise DimensionMismatch(
            f"congruence needs X with {S.shape[0]} rows, got shape {X.shape}"
        )
    out = X.T @ S @ X
    return 0.5 * (out + out.T)


def trim_poly(coeffs, rel_tol=_COEFF_TRIM_REL):
    """Drop leading coefficients below rel_tol * max|coeff|.

    Returns the all-zero polynomial as the single coefficient [0.0].
    """
    coeffs = np.atleast_1d(np.asarray(coeffs, dtype=float))
    top = np.max(np.abs(coeffs)) if coeffs.size else 0.0
    if top == 0.0:
        return np.zeros(1)
    cut = rel_tol * top
    deg = coeffs.size - 1
    while deg > 0 and abs(coeffs[deg]) <= cut:
        deg -= 1
    out = coeffs[: deg + 1].copy()
    if out.size == 1 and abs(out[0]) <= cut:
        return np.zeros(1)
    return out


def is_zero_poly(coeffs):
    coeffs = np.atleast_1d(np.asarray(coeffs, dtype=float))
    return bool(np.all(coeffs == 0.0))


def det_poly(A, B, C):
    """Coefficients of p(s) = det(A + 2sB + s^2 C), ascending order.

    The degree is at most 2m, so the polynomial is recovered exactly
    from determinant values at the 2m+1 integer nodes -m..m by Newton
    divided differences; coefficients are then trimmed at
    1e-10 * max|coeff|.
    """
    A = symmetrize(A)
    B = np.asarray(B, dtype=float)
    C = np.asarray(C, dtype=float)
    if B.shape != A.shape or C.shape != A.shape:
        raise DimensionMismatch(
            f"coefficient shapes differ: {A.shape}, {B.shape}, {C.shape}"
        )
    m = A.shape[0]
    nodes = np.arange(-m, m + 1, dtype=float)
    values = np.array(
        [np.linalg.det(A + 2.0 * s * B + s * s * C) for s in nodes]
    )
    # Divided-difference table, then expansion of the Newton form.
    dd = values.copy()
    for j in range(1, nodes.size):
        dd[j:] = (dd[j:] - dd[j - 1 : -1]) / (nodes[j:] - nodes[: -j])
    poly = np.array([dd[-1]])
    for j in range(nodes.size - 2, -1, -1):
        poly = npoly.polymul(poly, np.array([-nodes[j], 1.0]))
        poly[0] += dd[j]
    return trim_poly(poly)


def poly_eval(coeffs, x):
    return npoly.polyval(x, np.asarray(coeffs, dtype=float))


def _unit_scale(coeffs):
    # Positive rescaling preserves the sign of every evaluation, so the
    # Sturm sign sequences are unaffected while the chain stays O(1).
    return coeffs / np.max(np.abs(coeffs))


def sturm_chain(coeffs):
    """Canonical Sturm chain p, p', -rem(...), numerically stabilized.

    Every element is rescaled to unit max-coefficient (a positive factor,
    so sign sequences are untouched); remainder coefficients below
    1e-12 * max|coeff| of the polynomials entering the division are
    pruned.  Rescaling keeps genuine structure at O(1) while a remainder
    that is pure roundoff (the multiple-root case) lands near machine
    epsilon and is pruned, terminating the chain.
    """
    p = trim_poly(coeffs)
    if is_zero_poly(p):
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    chain = [_unit_scale(p)]
    if p.size > 1:
        chain.append(_unit_scale(trim_poly(npoly.polyder(p))))
    while chain[-1].size > 1:
        _, rem = npoly.polydiv(chain[-2], chain[-1])
        rem = np.atleast_1d(-rem)
        # Inputs are unit-scaled, so the prune threshold is absolute.
        rem[np.abs(rem) < _STURM_PRUNE_REL] = 0.0
        rem = trim_poly(rem, _STURM_PRUNE_REL)
        if is_zero_poly(rem):
            break
        chain.append(_unit_scale(rem))
    return chain


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _variations_at(chain, x):
    return _variations([np.sign(poly_eval(p, x)) for p in chain])


def _variations_at_inf(chain, positive):
    signs = []
    for p in chain:
        lead = p[-1]
        deg = p.size - 1
        s = np.sign(lead)
        if not positive and deg % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def real_root_count(coeffs):
    """Number of distinct real roots, by Sturm's theorem over all of R.

    Works for polynomials with multiple roots too: the canonical chain
    counts each distinct root once.
    """
    p = trim_poly(coeffs)
    if is_zero_poly(p):
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    if p.size == 1:
        return 0
    chain = sturm_chain(p)
    return _variations_at_inf(chain, positive=False) - _variations_at_inf(
        chain, positive=True
    )


def cauchy_root_bound(coeffs):
    """Every real root lies strictly inside [-bound, bound]."""
    p = trim_poly(coeffs)
    if p.size == 1:
        return 1.0
    return 1.0 + float(np.max(np.abs(p[:-1])) / abs(p[-1]))


def real_roots(coeffs, refine=1e-12):
    """Distinct real roots, isolated by Sturm bisection then refined.

    Each root is bracketed by halving intervals on which the variation
    count drops by exactly one, until the bracket width falls below
    ``refine * max(1, |endpoint|)``; the midpoint is returned.  Multiple
    roots are located once, like :func:`real_root_count`.
    """
    p = trim_poly(coeffs)
    if is_zero_poly(p):
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if p.size == 1:
        return np.array([])
    chain = sturm_chain(p)
    bound = cauchy_root_bound(p)
    lo, hi = -bound, bound
    v_lo, v_hi = _variations_at(chain, lo), _variations_at(chain, hi)
    roots = []
    stack = [(lo, hi, v_lo, v_hi)]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count <= 0:
            continue
        if count == 1:
            while b - a > refine * max(1.0, abs(a), abs(b)):
                mid = 0.5 * (a + b)
                vm = _variations_at(chain, mid)
                if va - vm >= 1:
                    b, vb = mid, vm
                else:
                    a, va = mid, vm
            roots.append(0.5 * (a + b))
            continue
        mid = 0.5 * (a + b)
        if poly_eval(p, mid) == 0.0:
            # Nudge the split point off the exact root.
            mid += (b - a) * 1e-3
        vm = _variations_at(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    return np.array(sorted(roots))
