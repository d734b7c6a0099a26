"""Truncated Fock-space verification, independent of the matrix calculus.

The linear nullifiers (a_i - sum_j K_ij adag_j) |phi> = 0 give a two-photon
recursion for the Fock amplitudes of the state of K:

    sqrt(mu_i) c(mu) = sum_j K_ij sqrt((mu - e_i)_j) c(mu - e_i - e_j)

for any i with mu_i > 0.  Starting from c(vacuum) = 1 and walking total
photon number upward in steps of two fills every even sector up to the
cutoff; odd sectors vanish identically.  Different choices of i must agree,
which is asserted and doubles as a consistency check of K itself.

Quadratic operators adag M a conserve photon number, so applying them to a
truncated state is exact sector by sector: residual norms computed here have
no truncation artifact and confirm (or refute) nullifier claims to machine
precision.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import BadPairing, InconsistentRecursion, OddCutoff, ShapeMismatch

# relative (to the sector's largest amplitude) agreement required between
# the recursion's different mode choices
CONSISTENCY_TOL = 1e-10
# amplitudes below this are dropped from JSON exports
EXPORT_CUTOFF = 1e-14


@dataclass
class FockVector:
    """Sparse state vector over occupation-number tuples.

    amplitudes maps occupation tuples (length n_modes, total <= cutoff) to
    complex amplitudes; absent keys are zero.
    """

    n_modes: int
    cutoff: int
    amplitudes: dict = field(default_factory=dict)

    def norm(self):
        return float(np.sqrt(sum(abs(c) ** 2 for c in self.amplitudes.values())))

    def normalize(self):
        """Scale to unit norm in place and return self."""
        nrm = self.norm()
        if nrm > 0:
            self.amplitudes = {k: v / nrm for k, v in self.amplitudes.items()}
        return self

    def amplitude(self, occ):
        return self.amplitudes.get(tuple(occ), 0.0 + 0.0j)


@dataclass
class SpinBasisView:
    """The same amplitudes keyed by Schwinger spin labels.

    Each mode pair (r, s) of the pairing becomes one spin with
    s = (n_r + n_s)/2 and m = (n_r - n_s)/2; keys are tuples of (s, m)
    pairs, one per spin, holding half-integer floats.
    """

    pairing: object
    amplitudes: dict

    def amplitude(self, spins):
        return self.amplitudes.get(tuple(spins), 0.0 + 0.0j)


def _occupations(total, modes):
    """All occupation tuples of `modes` modes summing to `total`."""
    if modes == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _occupations(total - head, modes - 1):
            yield (head,) + rest


def state_from_k(k, cutoff):
    """Fock amplitudes of the Gaussian state of K, up to a photon cutoff.

    Parameters
    ----------
    k : (n, n) array_like, complex symmetric with spectral norm < 1
    cutoff : int
        Maximum total photon number, even and >= 2.

    Returns
    -------
    FockVector
        Normalized; only even sectors are populated.

    Raises
    ------
    OddCutoff
    InconsistentRecursion
        If two recursion routes disagree, which signals a non-symmetric or
        otherwise invalid K (or a bug).
    """
    k = np.asarray(k, dtype=complex)
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        raise ShapeMismatch(f"K must be square 2-D, got {k.shape}")
    if cutoff % 2 != 0 or cutoff < 2:
        raise OddCutoff("cutoff must be an even integer >= 2")
    n = k.shape[0]
    amps = {(0,) * n: 1.0 + 0.0j}
    sqrt = np.sqrt
    for total in range(2, cutoff + 1, 2):
        sector = {}
        scale = 0.0
        spread = 0.0
        for mu in _occupations(total, n):
            vals = []
            for i in range(n):
                if mu[i] == 0:
                    continue
                nu = list(mu)
                nu[i] -= 1
                acc = 0.0 + 0.0j
                for j in range(n):
                    if k[i, j] == 0.0 or nu[j] == 0:
                        continue
                    nu[j] -= 1
                    acc += k[i, j] * sqrt(nu[j] + 1) * amps.get(tuple(nu), 0.0)
                    nu[j] += 1
                vals.append(acc / sqrt(mu[i]))
            value = sum(vals) / len(vals)
            spread = max(
                spread, max(abs(v - value) for v in vals)
            )
            scale = max(scale, abs(value))
            if value != 0.0:
                sector[mu] = value
        if scale > 0.0 and spread > CONSISTENCY_TOL * scale:
            raise InconsistentRecursion(
                f"recursion routes disagree by {spread:.3e} in sector {total} "
                f"(scale {scale:.3e})"
            )
        amps.update(sector)
    return FockVector(n, cutoff, amps).normalize()


def apply_quadratic(m, v):
    """Apply the photon-conserving operator adag M a to a Fock vector.

    Exact within each photon-number sector (these operators never leave a
    sector, so the truncation does not leak).
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape != (v.n_modes, v.n_modes):
        raise ShapeMismatch(
            f"M shape {m.shape} does not match {v.n_modes} modes"
        )
    out = {}
    nz = [(i, j) for i in range(v.n_modes) for j in range(v.n_modes) if m[i, j] != 0.0]
    for occ, amp in v.amplitudes.items():
        for i, j in nz:
            if occ[j] == 0:
                continue
            # adag_i a_j |occ> = sqrt(occ_j) sqrt(occ_i + 1 - delta_ij) |occ - e_j + e_i>
            coeff = m[i, j] * np.sqrt(occ[j]) * np.sqrt(occ[i] + 1 - (i == j))
            tgt = list(occ)
            tgt[j] -= 1
            tgt[i] += 1
            tgt = tuple(tgt)
            out[tgt] = out.get(tgt, 0.0 + 0.0j) + coeff * amp
    return FockVector(v.n_modes, v.cutoff, out)


def nullifier_residual(m, k, cutoff):
    """|| adag M a |phi_K> || for the normalized truncated state.

    Sector-exact: true nullifiers give rounding-level residuals at any even
    cutoff >= 2, with no cutoff artifact.
    """
    v = state_from_k(k, cutoff)
    return apply_quadratic(m, v).norm()


def spin_basis_view(v, pairing):
    """Relabel a Fock vector in the Schwinger spin basis of a mode pairing.

    Pure relabeling: amplitudes are untouched, each occupation (n_r, n_s)
    of a pair becomes the spin label (s, m) = ((n_r + n_s)/2, (n_r - n_s)/2).

    Raises
    ------
    BadPairing
        If the pairing does not cover exactly the modes of v.
    """
    if pairing.n_modes != v.n_modes:
        raise BadPairing(
            f"pairing covers {pairing.n_modes} modes, vector has {v.n_modes}"
        )
    relabeled = {}
    for occ, amp in v.amplitudes.items():
        key = tuple(
            ((occ[r] + occ[s]) / 2.0, (occ[r] - occ[s]) / 2.0)
            for r, s in pairing.pairs
        )
        relabeled[key] = relabeled.get(key, 0.0 + 0.0j) + amp
    return SpinBasisView(pairing, relabeled)


# ----------------------------------------------------------------------
# serialization


def fock_to_json(v):
    """FockVector -> {"n":, "cutoff":, "amps": [{"occ":, "re":, "im":}]}.

    Amplitudes below 1e-14 in magnitude are omitted; entries are sorted by
    (total photons, occupation) so output is deterministic.
    """
    amps = []
    for occ in sorted(v.amplitudes, key=lambda o: (sum(o), o)):
        c = v.amplitudes[occ]
        if abs(c) < EXPORT_CUTOFF:
            continue
        amps.append(
            {"occ": [int(x) for x in occ], "re": float(c.real), "im": float(c.imag)}
        )
    return {"n": int(v.n_modes), "cutoff": int(v.cutoff), "amps": amps}


def fock_from_json(obj):
    """Inverse of :func:`fock_to_json`; accepts a dict or JSON string."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    amps = {
        tuple(int(x) for x in row["occ"]): complex(row["re"], row["im"])
        for row in obj["amps"]
    }
    return FockVector(int(obj["n"]), int(obj["cutoff"]), amps)
