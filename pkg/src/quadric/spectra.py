"""Dense symmetric eigensolver with multiplicity clustering.

A cyclic Jacobi rotation scheme: robust at the few-hundred-dimension scale
this package works at, and simple enough to audit.  Eigenvalues are grouped
into multiplicity clusters so that spectra can be compared against exact
closed-form lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AsymmetryError, ConvergenceError

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100
#: Eigenvalues closer than this multiple of the tolerance share a cluster.
CLUSTER_WIDTH_FACTOR = 10.0


@dataclass(frozen=True)
class SpectrumReport:
    """Sorted eigenvalues of a self-adjoint operator with multiplicities.

    Attributes:
        eigenvalues: all eigenvalues, ascending.
        vectors: orthonormal eigenvectors, one per column, same order.
        clusters: ``(value, multiplicity)`` pairs, ascending; each value is
            the mean of its cluster.
        asymmetry: measured ``max |op - op^T|`` of the input.
        offdiagonal: off-diagonal Frobenius norm at termination.
        reconstruction_residual: Frobenius norm of ``op - Q diag Q^T``.
        tol: tolerance the solve was run at.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    clusters: tuple[tuple[float, int], ...]
    asymmetry: float
    offdiagonal: float
    reconstruction_residual: float
    tol: float

    @property
    def distinct(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.clusters)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.clusters)


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi_rotate(a: np.ndarray, q: np.ndarray, p: int, r: int) -> None:
    """One Jacobi rotation zeroing ``a[p, r]`` (in place)."""
    apr = a[p, r]
    if apr == 0.0:
        return
    tau = (a[r, r] - a[p, p]) / (2.0 * apr)
    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.hypot(1.0, t)
    s = t * c
    rot_p = c * a[:, p] - s * a[:, r]
    rot_r = s * a[:, p] + c * a[:, r]
    a[:, p], a[:, r] = rot_p, rot_r
    rot_p = c * a[p, :] - s * a[r, :]
    rot_r = s * a[p, :] + c * a[r, :]
    a[p, :], a[r, :] = rot_p, rot_r
    rot_p = c * q[:, p] - s * q[:, r]
    rot_r = s * q[:, p] + c * q[:, r]
    q[:, p], q[:, r] = rot_p, rot_r


def cluster_eigenvalues(values: np.ndarray, width: float) -> tuple[tuple[float, int], ...]:
    """Group sorted eigenvalues into clusters separated by gaps > ``width``."""
    values = np.sort(np.asarray(values, dtype=float))
    clusters: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > width:
            block = values[start:i]
            clusters.append((float(np.mean(block)), int(block.size)))
            start = i
    return tuple(clusters)


def sym_eigen(op: np.ndarray, tol: float = DEFAULT_TOL) -> SpectrumReport:
    """Full spectrum of a self-adjoint operator.

    Cyclic Jacobi sweeps run until the off-diagonal Frobenius norm drops
    below ``tol`` (at most ``MAX_SWEEPS`` sweeps).  Multiplicities use a
    cluster width of ``10 * tol``.

    Raises:
        AsymmetryError: if ``max |op - op^T| > tol``.
        ConvergenceError: if the sweep limit is hit before the tolerance.
    """
    op = np.asarray(op, dtype=float)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise AsymmetryError(float("nan"), f"expected a square matrix, got shape {op.shape}")
    defect = float(np.max(np.abs(op - op.T))) if op.size else 0.0
    if defect > tol:
        raise AsymmetryError(defect)

    a = 0.5 * (op + op.T)
    n = a.shape[0]
    q = np.eye(n)
    off = _offdiag_norm(a)
    sweeps = 0
    while off > tol:
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(
                f"off-diagonal norm {off:.3e} above tol {tol:.3e} after {MAX_SWEEPS} sweeps"
            )
        for p in range(n - 1):
            for r in range(p + 1, n):
                _jacobi_rotate(a, q, p, r)
        off = _offdiag_norm(a)
        sweeps += 1

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = q[:, order]
    recon = float(np.linalg.norm(op - vectors @ np.diag(values) @ vectors.T))
    return SpectrumReport(
        eigenvalues=values,
        vectors=vectors,
        clusters=cluster_eigenvalues(values, CLUSTER_WIDTH_FACTOR * tol),
        asymmetry=defect,
        offdiagonal=off,
        reconstruction_residual=recon,
        tol=tol,
    )


def match_spectrum(
    report: SpectrumReport,
    template: list[tuple[float, int]],
    rel_tol: float = 1e-8,
) -> tuple[bool, float]:
    """Compare clustered spectrum against ``(value, multiplicity)`` pairs.

    Values are matched in ascending order with relative tolerance
    ``rel_tol`` (absolute near zero); multiplicities must agree exactly.
    Returns ``(matched, worst_relative_deviation)``.
    """
    expected = sorted(template)
    clusters = report.clusters
    if len(clusters) != len(expected):
        return False, float("inf")
    worst = 0.0
    ok = True
    for (got_v, got_k), (exp_v, exp_k) in zip(clusters, expected):
        dev = abs(got_v - exp_v) / max(1.0, abs(exp_v))
        worst = max(worst, dev)
        if got_k != exp_k or dev > rel_tol:
            ok = False
    return ok, worst
