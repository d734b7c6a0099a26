"""Schwinger U(2) operators as Hermitian mode matrices.

A pair of qumodes (r, s) carries four quadratic, photon-number-conserving
operators:

    S^x = (adag_r a_s + adag_s a_r) / 2
    S^y = (adag_r a_s - adag_s a_r) / 2i
    S^z = (n_r - n_s) / 2
    S^0 = (n_r + n_s) / 2

Each is adag M a for a Hermitian matrix M = sigma/2 with sigma the
corresponding Pauli matrix embedded at rows/columns (r, s); x, y, z close the
su(2) algebra and S^0 commutes with all of them.  Real linear combinations of
these operators are exactly the operators adag M a with M Hermitian, and
that matrix picture is what this module manipulates: symbolic expressions of
Schwinger terms <-> Hermitian matrices, unitary basis changes, and matrix
exponentials of generators.
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    EqualIndices,
    IndexOutOfRange,
    NonHermitian,
    NonUnitary,
    ShapeMismatch,
)

AXES = ("0", "x", "y", "z")

# Hermiticity tolerance (max entry)
TOL_HERM = 1e-10


@dataclass(frozen=True)
class SchwingerTerm:
    """One coefficient * S^axis_{r,s} term.

    axis is one of "0", "x", "y", "z"; pair is (r, s) with r < s, except that
    axis "0" also admits r = s, where S^0_{r,r} is read as the single-mode
    number operator n_r.
    """

    axis: str
    pair: tuple
    coeff: float

    def __post_init__(self):
        if self.axis not in AXES:
            raise ShapeMismatch(f"unknown axis {self.axis!r}")
        r, s = self.pair
        if r < 0 or s < 0:
            raise IndexOutOfRange(f"negative mode index in pair ({r}, {s})")
        if r == s and self.axis != "0":
            raise EqualIndices(f"axis {self.axis} needs two distinct modes")
        if r > s:
            raise IndexOutOfRange(f"pair must be ordered, got ({r}, {s})")


@dataclass
class SchwingerExpression:
    """Real linear combination of Schwinger terms on n qumodes."""

    n: int
    terms: list

    def __post_init__(self):
        for t in self.terms:
            if t.pair[1] >= self.n:
                raise IndexOutOfRange(
                    f"pair {t.pair} outside 0..{self.n - 1}"
                )


def embed_pauli(axis, r, s, n):
    """Pauli matrix sigma_axis embedded at modes (r, s) of an n-mode system.

    The quadratic operator adag (sigma_axis^{(r,s)} / 2) a is the Schwinger
    S^axis_{r,s} operator.

    Parameters
    ----------
    axis : str
        "0", "x", "y" or "z".
    r, s : int
        Mode indices, 0 <= r < s < n.
    n : int
        Total number of modes.
    """
    if axis not in AXES:
        raise ShapeMismatch(f"unknown axis {axis!r}")
    if not (0 <= r < n and 0 <= s < n):
        raise IndexOutOfRange(f"pair ({r}, {s}) outside 0..{n - 1}")
    if r == s:
        raise EqualIndices("embedding needs two distinct modes")
    if r > s:
        r, s = s, r
    m = np.zeros((n, n), dtype=complex)
    if axis == "0":
        m[r, r] = 1.0
        m[s, s] = 1.0
    elif axis == "x":
        m[r, s] = 1.0
        m[s, r] = 1.0
    elif axis == "y":
        m[r, s] = -1j
        m[s, r] = 1j
    else:
        m[r, r] = 1.0
        m[s, s] = -1.0
    return m


def expression_to_matrix(expr):
    """Assemble the Hermitian matrix M with adag M a = sum of the terms."""
    m = np.zeros((expr.n, expr.n), dtype=complex)
    for t in expr.terms:
        r, s = t.pair
        if r == s:
            # singleton S^0_{r,r} is the number operator n_r
            m[r, r] += t.coeff
        else:
            m += 0.5 * t.coeff * embed_pauli(t.axis, r, s, expr.n)
    return m


def matrix_to_expression(m):
    """Decompose a Hermitian matrix into Schwinger terms (canonical form).

    The Schwinger family is overcomplete, so a fixed decomposition rule is
    used: each off-diagonal entry M_rs (r < s) contributes
    2 Re(M_rs) S^x_{r,s} - 2 Im(M_rs) S^y_{r,s}; diagonal entries are taken
    in consecutive pairs (2k, 2k+1) as (d_r + d_s) S^0 + (d_r - d_s) S^z,
    and for odd n the lone trailing entry d becomes d (S^0 - S^z) on the
    last pair.  The result round-trips through
    :func:`expression_to_matrix` to 1e-12.

    Raises
    ------
    NonHermitian
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"matrix must be square 2-D, got {m.shape}")
    if m.size and np.max(np.abs(m - m.conj().T)) > TOL_HERM:
        raise NonHermitian("matrix is not Hermitian within tolerance")
    n = m.shape[0]
    terms = []
    diag = m.diagonal().real
    for k in range(n // 2):
        r, s = 2 * k, 2 * k + 1
        c0 = diag[r] + diag[s]
        cz = diag[r] - diag[s]
        if c0 != 0.0:
            terms.append(SchwingerTerm("0", (r, s), float(c0)))
        if cz != 0.0:
            terms.append(SchwingerTerm("z", (r, s), float(cz)))
    if n % 2 == 1 and n >= 2 and diag[n - 1] != 0.0:
        d = float(diag[n - 1])
        terms.append(SchwingerTerm("0", (n - 2, n - 1), d))
        terms.append(SchwingerTerm("z", (n - 2, n - 1), -d))
    if n == 1 and diag[0] != 0.0:
        # no partner mode: keep the bare number operator
        terms.append(SchwingerTerm("0", (0, 0), float(diag[0])))
    for r in range(n):
        for s in range(r + 1, n):
            cx = 2.0 * m[r, s].real
            cy = -2.0 * m[r, s].imag
            if cx != 0.0:
                terms.append(SchwingerTerm("x", (r, s), float(cx)))
            if cy != 0.0:
                terms.append(SchwingerTerm("y", (r, s), float(cy)))
    return SchwingerExpression(n, terms)


def combine_terms(expr):
    """Collect like terms (same axis and pair) and drop exact zeros."""
    acc = {}
    for t in expr.terms:
        key = (t.axis, t.pair)
        acc[key] = acc.get(key, 0.0) + t.coeff
    terms = [
        SchwingerTerm(axis, pair, c)
        for (axis, pair), c in sorted(
            acc.items(), key=lambda kv: (kv[0][1], AXES.index(kv[0][0]))
        )
        if c != 0.0
    ]
    return SchwingerExpression(expr.n, terms)


def add_expressions(a, b, ca=1.0, cb=1.0):
    """ca * a + cb * b as a combined expression."""
    if a.n != b.n:
        raise ShapeMismatch(f"mode counts differ: {a.n} vs {b.n}")
    terms = [SchwingerTerm(t.axis, t.pair, ca * t.coeff) for t in a.terms]
    terms += [SchwingerTerm(t.axis, t.pair, cb * t.coeff) for t in b.terms]
    return combine_terms(SchwingerExpression(a.n, terms))


def su2_structure_check(r, s, n):
    """Max defect of the u(2) structure relations for the embedding at (r, s).

    Checks [sigma_k/2, sigma_l/2] = i eps_klm sigma_m/2 on the embedded x, y,
    z matrices, and that the embedded sigma_0 commutes with all three.
    Returns the largest absolute entry of any violated relation (0 for a
    correct embedding).
    """
    sig = {a: embed_pauli(a, r, s, n) for a in AXES}
    eps = {("x", "y"): "z", ("y", "z"): "x", ("z", "x"): "y"}
    defect = 0.0

    def comm(a, b):
        return a @ b - b @ a

    for (k, l), target in eps.items():
        d = comm(0.5 * sig[k], 0.5 * sig[l]) - 0.5j * sig[target]
        defect = max(defect, float(np.max(np.abs(d))))
        d = comm(0.5 * sig[l], 0.5 * sig[k]) + 0.5j * sig[target]
        defect = max(defect, float(np.max(np.abs(d))))
    for a in ("x", "y", "z"):
        defect = max(defect, float(np.max(np.abs(comm(sig["0"], sig[a])))))
    return defect


def change_basis(m, w):
    """Rewrite the quadratic form adag M a in the new modes b = W a.

    Returns M' = W^H M W, so adag_new M' a_new is the same operator.
    Hermiticity is preserved (re-symmetrized against rounding).
    """
    m = np.asarray(m, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if m.shape != w.shape or m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"shapes {m.shape} and {w.shape} incompatible")
    if np.max(np.abs(w @ w.conj().T - np.eye(w.shape[0]))) > 1e-10:
        raise NonUnitary("W is not unitary within 1e-10")
    out = w.conj().T @ m @ w
    return 0.5 * (out + out.conj().T)


def generator_to_unitary(m, theta):
    """Mode unitary W = exp(-i theta M) generated by the Hamiltonian adag M a.

    Computed through the Hermitian eigendecomposition of M, so W is unitary
    to rounding for any real theta.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"matrix must be square 2-D, got {m.shape}")
    if m.size and np.max(np.abs(m - m.conj().T)) > TOL_HERM:
        raise NonHermitian("generator is not Hermitian within tolerance")
    vals, vecs = np.linalg.eigh(m)
    return (vecs * np.exp(-1j * theta * vals)) @ vecs.conj().T


# ----------------------------------------------------------------------
# serialization and pretty printing


def expression_to_json(expr):
    """SchwingerExpression -> plain dict (stable term order as given)."""
    return {
        "n": int(expr.n),
        "terms": [
            {"axis": t.axis, "pair": [int(t.pair[0]), int(t.pair[1])], "coeff": float(t.coeff)}
            for t in expr.terms
        ],
    }


def expression_from_json(obj):
    """Inverse of :func:`expression_to_json`; accepts a dict or JSON string."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    terms = [
        SchwingerTerm(t["axis"], (int(t["pair"][0]), int(t["pair"][1])), float(t["coeff"]))
        for t in obj["terms"]
    ]
    return SchwingerExpression(int(obj["n"]), terms)


def _format_coeff(c):
    # keep one decimal on integral coefficients so "1.0" reads as a weight
    if c == int(c) and abs(c) < 1e15:
        return f"{c:.1f}"
    return f"{c:.10g}"


def format_expression(expr, labels=None):
    """Render an expression like "1.0·S^z_{0,1} - 0.5·S^x_{0,2}".

    Parameters
    ----------
    expr : SchwingerExpression
    labels : list of str, optional
        Per-mode labels replacing the bare indices (e.g. "1a" for wire
        spin/rail naming).
    """
    if not expr.terms:
        return "0"
    if labels is None:
        labels = [str(i) for i in range(expr.n)]
    pieces = []
    for i, t in enumerate(expr.terms):
        c = t.coeff
        sign = "-" if c < 0 else "+"
        body = (
            f"{_format_coeff(abs(c))}·"
            f"S^{t.axis}_{{{labels[t.pair[0]]},{labels[t.pair[1]]}}}"
        )
        if i == 0:
            pieces.append(body if c >= 0 else "-" + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)
