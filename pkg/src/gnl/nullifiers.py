"""Quadratic nullifier criteria and derivation.

A photon-number-conserving quadratic operator adag M a (M Hermitian)
annihilates the Gaussian pure state with adjacency matrix K exactly when

    M K = -(M K)^T.

Everything in this module is built on that antisymmetry criterion:

* :func:`is_nullifier` evaluates it directly;
* :func:`nullifier_space` returns an orthonormal basis of ALL Hermitian M
  satisfying it, as the kernel of a real linear map;
* :func:`bipartite_nullifier` constructs one analytically from the singular
  value decomposition of a bipartite block;
* :func:`two_mode_invariant_class` inverts the question and solves for all
  two-mode K nullified by a given generator;
* :func:`verify_symmetry` checks the exponentiated statement, i.e. that
  W = exp(-i theta M) satisfies W K W^T = K.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    AllZeroCoefficients,
    InvalidBlockShape,
    NonCommutingD,
    ShapeMismatch,
)
from .schwinger import generator_to_unitary

# residual threshold for the antisymmetry criterion (max entry)
TOL_NULL = 1e-10
# singular values below TOL_KERNEL_REL * sigma_max count as kernel
TOL_KERNEL_REL = 1e-10
# spectra with above/below ratio under this are flagged, not trusted
KERNEL_GAP_MIN = 10.0


@dataclass
class NullifierBasis:
    """Orthonormal basis of the quadratic nullifier space of one K.

    generators are Hermitian matrices, orthonormal under the real inner
    product Re tr(A B); dimension = len(generators); singular_values is the
    full spectrum of the kernel solve (descending) with threshold the cut
    below which values counted as kernel, useful for judging how clear the
    cut was; borderline is True when the spectral gap around the threshold
    is thinner than a factor 10.
    """

    generators: list
    dimension: int
    singular_values: list
    threshold: float = 0.0
    borderline: bool = False


@dataclass
class TwoModeClass:
    """Solutions (k11, k12, k22) of the two-mode invariance constraints.

    basis holds unit complex 3-vectors; any complex combination, assembled
    into the symmetric matrix [[k11, k12], [k12, k22]] and scaled to spectral
    norm < 1, is a state nullified by the generator that produced the class.
    """

    basis: list
    dimension: int


def is_nullifier(m, k, tol=TOL_NULL):
    """Antisymmetry test: does adag M a annihilate the state of K?

    Returns
    -------
    (bool, float)
        The verdict and the residual max |MK + (MK)^T|.
    """
    m = np.asarray(m, dtype=complex)
    k = np.asarray(k, dtype=complex)
    if m.shape != k.shape or m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"shapes {m.shape} and {k.shape} incompatible")
    mk = m @ k
    residual = float(np.max(np.abs(mk + mk.T))) if m.size else 0.0
    return residual <= tol, residual


def _snap_and_sign(w, tol_zero=1e-13, tol_tie=1e-9):
    """Canonicalize one kernel vector in place of arbitrary SVD gauge.

    Coordinates below tol_zero (relative to the largest) are solver dust and
    are snapped to zero; the vector is renormalized and then phased/signed so
    that its first coordinate of near-maximal magnitude is real positive.
    The near-tie tolerance keeps the choice stable when two coordinates are
    equal up to rounding.
    """
    mags = np.abs(w)
    w = np.where(mags < tol_zero * mags.max(), 0.0, w)
    w = w / np.linalg.norm(w)
    mags = np.abs(w)
    lead = int(np.argmax(mags >= (1.0 - tol_tie) * mags.max()))
    if np.iscomplexobj(w):
        w = w * (mags[lead] / w[lead])
        if abs(w[lead].imag) < tol_zero:
            w[lead] = w[lead].real
    elif w[lead] < 0:
        w = -w
    return w


def _hermitian_basis(n):
    """Orthonormal Hermitian basis under Re tr(A B), in canonical order.

    n diagonal units E_ii first, then for each r < s (lexicographic) the
    normalized embedded sigma_x and sigma_y.
    """
    basis = []
    for i in range(n):
        e = np.zeros((n, n), dtype=complex)
        e[i, i] = 1.0
        basis.append(e)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for r in range(n):
        for s in range(r + 1, n):
            x = np.zeros((n, n), dtype=complex)
            x[r, s] = inv_sqrt2
            x[s, r] = inv_sqrt2
            basis.append(x)
            y = np.zeros((n, n), dtype=complex)
            y[r, s] = -1j * inv_sqrt2
            y[s, r] = 1j * inv_sqrt2
            basis.append(y)
    return basis


def nullifier_space(k):
    """Complete space of quadratic nullifiers of K, via one SVD.

    Hermitian M is parametrized by n^2 real coordinates over the canonical
    orthonormal basis; the real-linear map M -> MK + (MK)^T is assembled as
    a real matrix and its kernel extracted by singular value decomposition.
    The kernel basis is then canonicalized deterministically: candidate
    directions are the projections of the canonical basis elements onto the
    kernel, accepted greedily (Gram-Schmidt) in canonical order, each signed
    so its largest-magnitude coordinate is positive.  Output is therefore
    reproducible byte-for-byte across runs.
    """
    k = np.asarray(k, dtype=complex)
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        raise ShapeMismatch(f"K must be square 2-D, got {k.shape}")
    n = k.shape[0]
    basis = _hermitian_basis(n)
    cols = []
    for b in basis:
        s = b @ k + (b @ k).T
        cols.append(np.concatenate([s.real.ravel(), s.imag.ravel()]))
    a = np.array(cols).T  # (2 n^2, n^2), columns indexed by basis elements
    _, sing, vh = np.linalg.svd(a)
    sing = list(sing) + [0.0] * (len(basis) - len(sing))
    sing = np.array(sing)
    smax = sing[0] if len(sing) else 0.0
    tau = TOL_KERNEL_REL * smax
    in_kernel = sing <= tau
    dim = int(np.sum(in_kernel))

    borderline = False
    if 0 < dim < len(sing):
        above = sing[~in_kernel].min()
        below = sing[in_kernel].max()
        if below > 0 and above / below < KERNEL_GAP_MIN:
            borderline = True

    kernel = vh[len(sing) - dim:] if dim else np.zeros((0, len(basis)))
    # projector onto the kernel in coefficient space
    proj = kernel.T @ kernel
    chosen = []
    for idx in range(len(basis)):
        w = proj[:, idx].copy()
        for c in chosen:
            w -= (c @ w) * c
        norm = np.linalg.norm(w)
        if norm <= 1e-8:
            continue
        chosen.append(_snap_and_sign(w / norm))
        if len(chosen) == dim:
            break
    # the canonical directions span everything, but guard against extreme
    # cancellation by topping up from the raw kernel rows
    for row in kernel:
        if len(chosen) == dim:
            break
        w = row.copy()
        for c in chosen:
            w -= (c @ w) * c
        norm = np.linalg.norm(w)
        if norm > 1e-8:
            chosen.append(_snap_and_sign(w / norm))

    generators = []
    for w in chosen:
        m = np.zeros((n, n), dtype=complex)
        for coeff, b in zip(w, basis):
            if coeff != 0.0:
                m += coeff * b
        m = 0.5 * (m + m.conj().T)
        ok, res = is_nullifier(m, k)
        assert ok, f"kernel element failed the residual check: {res:.3e}"
        generators.append(m)
    return NullifierBasis(generators, dim, [float(s) for s in sing], float(tau), borderline)


def _as_block_diag(d, size, name):
    d = np.asarray(d, dtype=float)
    if d.ndim == 0:
        return float(d) * np.eye(size)
    if d.ndim == 1:
        if d.shape[0] != size:
            raise InvalidBlockShape(f"{name} needs {size} entries, got {d.shape[0]}")
        return np.diag(d)
    if d.ndim == 2:
        if d.shape != (size, size):
            raise InvalidBlockShape(f"{name} must be {size}x{size}, got {d.shape}")
        if np.max(np.abs(d - d.T)) > TOL_NULL:
            raise InvalidBlockShape(f"{name} must be real symmetric")
        return d
    raise InvalidBlockShape(f"{name} has too many dimensions: {d.ndim}")


def bipartite_nullifier(k0, d, d_right=None):
    """Analytic nullifier of a bipartite state from the SVD of its block.

    For K = [[0, K0], [K0^T, 0]] with K0 = U Sigma V^H, the matrix

        M = (U (+) V*) diag(D_left, -D_right) (U^H (+) V^T)

    is Hermitian and satisfies MK = -(MK)^T whenever
    D_left Sigma = Sigma D_right.  D may be a scalar, a vector of diagonal
    entries, or a full real symmetric matrix; d_right defaults to d (the
    square case, where the condition is automatic for diagonal D).

    Returns the (n1+n2) x (n1+n2) Hermitian generator.

    Raises
    ------
    InvalidBlockShape, NonCommutingD
    """
    k0 = np.asarray(k0, dtype=complex)
    if k0.ndim != 2:
        raise InvalidBlockShape(f"K0 must be 2-D, got {k0.ndim}-D")
    n1, n2 = k0.shape
    u, sing, vh = np.linalg.svd(k0)
    d1 = _as_block_diag(d, n1, "D")
    if d_right is None:
        if n1 != n2 and np.asarray(d).ndim != 0:
            raise InvalidBlockShape(
                "rectangular K0 needs d_right (or a scalar d)"
            )
        d2 = _as_block_diag(d, n2, "D")
    else:
        d2 = _as_block_diag(d_right, n2, "D_right")
    sigma = np.zeros((n1, n2))
    sigma[: len(sing), : len(sing)] = np.diag(sing)
    if np.max(np.abs(d1 @ sigma - sigma @ d2)) > TOL_NULL:
        raise NonCommutingD("D does not commute with the singular profile")
    top = u @ d1 @ u.conj().T
    bottom = -vh.T @ d2 @ vh.conj()
    m = np.zeros((n1 + n2, n1 + n2), dtype=complex)
    m[:n1, :n1] = top
    m[n1:, n1:] = bottom
    return 0.5 * (m + m.conj().T)


def two_mode_invariant_class(alpha, beta, gamma, delta):
    """All two-mode states invariant under a given U(2) generator.

    The generator is M = (alpha sigma_0 + beta sigma_x + gamma sigma_y +
    delta sigma_z)/2; the antisymmetry criterion on a symmetric 2x2 matrix
    K = [[k11, k12], [k12, k22]] reduces to three complex linear constraints:

        (alpha + delta) k11 + (beta - i gamma) k12 = 0
        (beta + i gamma) k12 + (alpha - delta) k22 = 0
        (beta + i gamma) k11 + 2 alpha k12 + (beta - i gamma) k22 = 0

    The returned basis spans the solution set; the caller picks the scale
    (solutions are rays, physical states need spectral norm < 1).

    Raises
    ------
    AllZeroCoefficients
    """
    coeffs = np.array([alpha, beta, gamma, delta], dtype=float)
    if np.all(coeffs == 0.0):
        raise AllZeroCoefficients("generator coefficients are all zero")
    a, b, g, d = coeffs
    bp = b + 1j * g
    bm = b - 1j * g
    system = np.array(
        [
            [a + d, bm, 0.0],
            [0.0, bp, a - d],
            [bp, 2.0 * a, bm],
        ],
        dtype=complex,
    )
    _, sing, vh = np.linalg.svd(system)
    smax = sing[0]
    tau = TOL_KERNEL_REL * smax
    dim = int(np.sum(sing <= tau))
    kernel = vh[3 - dim:].conj() if dim else np.zeros((0, 3), dtype=complex)
    # same deterministic canonicalization as nullifier_space, complex case
    proj = kernel.T @ kernel.conj()  # Hermitian projector onto the kernel
    chosen = []
    for idx in range(3):
        w = proj[:, idx].copy()
        for c in chosen:
            w -= np.vdot(c, w) * c
        norm = np.linalg.norm(w)
        if norm <= 1e-8:
            continue
        chosen.append(_snap_and_sign(w / norm))
        if len(chosen) == dim:
            break
    return TwoModeClass(chosen, dim)


def verify_symmetry(k, m, theta_grid):
    """Max deviation of exp(-i theta M) K exp(-i theta M)^T from K.

    For a true nullifier the deviation stays at rounding level for every
    theta; otherwise it grows linearly near theta = 0 with slope set by the
    antisymmetry residual.
    """
    k = np.asarray(k, dtype=complex)
    m = np.asarray(m, dtype=complex)
    if m.shape != k.shape:
        raise ShapeMismatch(f"shapes {m.shape} and {k.shape} incompatible")
    worst = 0.0
    for theta in np.atleast_1d(np.asarray(theta_grid, dtype=float)):
        w = generator_to_unitary(m, float(theta))
        dev = float(np.max(np.abs(w @ k @ w.T - k)))
        worst = max(worst, dev)
    return worst
