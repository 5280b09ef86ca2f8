"""Floating-point spectral layer over the exact operators.

This is the numeric oracle: eigenvalue multisets, largest eigenvalues,
and joint spectra of commuting pairs. Exactness stops here by design;
inputs are exact SiteOperators, outputs are floats clustered at a fixed
absolute tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from .diagrams import SiteOperator

CLUSTER_TOL = 1e-8
# above this dimension a dense eigensolve is wasteful for just the top eigenvalue
_DENSE_LIMIT = 2048


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    def as_pairs(self) -> list[tuple[float, int]]:
        return list(zip(self.eigenvalues, self.multiplicities))


@dataclass(frozen=True)
class JointSpectrum:
    pairs: tuple[tuple[float, float], ...]
    multiplicities: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)


def cluster(values, tol: float = CLUSTER_TOL) -> tuple[tuple[float, ...], tuple[int, ...]]:
    """Group sorted values into clusters of width tol; return representatives and counts."""
    vals = sorted(float(v) for v in values)
    reps: list[float] = []
    counts: list[int] = []
    for v in vals:
        if reps and abs(v - reps[-1]) <= tol:
            counts[-1] += 1
        else:
            reps.append(v)
            counts.append(1)
    return tuple(reps), tuple(counts)


def _require_symmetric(m: SiteOperator):
    if not m.is_symmetric():
        raise ValueError("operator is not symmetric")


def sym_eigen(m: SiteOperator, tol: float = CLUSTER_TOL, vectors: bool = False):
    """Eigenvalues of an exact symmetric operator, clustered at tol.

    With vectors=True also returns the raw (eigenvalues, eigenvectors)
    arrays from the dense solve.
    """
    _require_symmetric(m)
    w, v = np.linalg.eigh(m.to_dense())
    reps, counts = cluster(w, tol)
    spec = Spectrum(reps, counts)
    if vectors:
        return spec, w, v
    return spec


def lambda_max(m: SiteOperator) -> float:
    """Largest eigenvalue; switches to a sparse Lanczos solve on big matrices."""
    _require_symmetric(m)
    if m.dim <= _DENSE_LIMIT:
        w = np.linalg.eigvalsh(m.to_dense())
        return float(w[-1])
    rows, cols, vals = m.to_coo()
    sp = scipy.sparse.coo_matrix((vals, (rows, cols)), shape=(m.dim, m.dim)).tocsr()
    w = scipy.sparse.linalg.eigsh(sp, k=1, which="LA", return_eigenvectors=False)
    return float(w[0])


def joint_spectrum(a: SiteOperator, b: SiteOperator, tol: float = CLUSTER_TOL) -> JointSpectrum:
    """Joint eigenvalue pairs of two exactly commuting symmetric operators.

    Diagonalizes a, then diagonalizes b restricted to each eigenspace of a.
    Commutation is checked exactly on the rational matrices first.
    """
    _require_symmetric(a)
    _require_symmetric(b)
    if a.n != b.n or a.d != b.d:
        raise ValueError("operator shape mismatch")
    if a @ b != b @ a:
        raise ValueError("operators do not commute exactly")
    wa, va = np.linalg.eigh(a.to_dense())
    dense_b = b.to_dense()
    reps, counts = cluster(wa, tol)
    pairs: list[tuple[float, float]] = []
    mults: list[int] = []
    start = 0
    for rep, count in zip(reps, counts):
        block = va[:, start:start + count]
        start += count
        restricted = block.T @ dense_b @ block
        wb = np.linalg.eigvalsh(restricted)
        b_reps, b_counts = cluster(wb, tol)
        for bv, bc in zip(b_reps, b_counts):
            pairs.append((rep, bv))
            mults.append(bc)
    return JointSpectrum(tuple(pairs), tuple(mults))
