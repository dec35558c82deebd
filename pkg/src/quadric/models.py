"""Model hypersurfaces: the isotropic tube family and principal-normal candidates.

The tube of radius ``r`` around a totally geodesic complex projective space
inside the even-dimensional quadric is the reference hypersurface with
isotropic normal: Hopf, isometric Reeb flow, and four constant principal
curvatures

    2 cot(2r)  on the Reeb direction          (multiplicity 1)
    0          on span{A xi, A N}             (multiplicity 2)
    -tan(r)    on an invariant complex block  (multiplicity 2k-2)
    cot(r)     on the complementary block     (multiplicity 2k-2).

Candidates with a principal normal (``A N = N``, ``A xi = -xi``) are built
synthetically for the nonexistence analysis; the shape operator on the
maximal complex subbundle is free, optionally constrained to pointwise
consistency relations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ExcludedParameterError, InvalidDimensionError, ModelValidationError
from .hypersurface import HypersurfaceData, induce_from_normal, structure_jacobi
from .spectra import SpectrumReport, sym_eigen
from .tangent import TangentModel, build_tangent_model

#: Half-width of the radius window excluded around pi/4 in grid scans.
RADIUS_EXCLUSION_HALFWIDTH = 0.01


# ---------------------------------------------------------------------------
# Tube over a totally geodesic complex projective space
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TubeModel:
    """Tube of radius ``r`` around a complex projective space in the quadric.

    Attributes:
        k: half the complex dimension (``m = 2k``).
        r: tube radius in ``(0, pi/2)``.
        h: induced hypersurface data.
        alpha: Reeb curvature ``2 cot(2r)``.
        bases: labelled orthonormal bases of the invariant subspaces
            (``xi``, ``A_xi``, ``A_N``, ``W1``, ``W2``), one vector per column.
    """

    k: int
    r: float
    h: HypersurfaceData
    alpha: float
    bases: dict[str, np.ndarray]


def tube_reeb_curvature(r: float) -> float:
    """Reeb curvature ``2 cot(2r)`` of the tube of radius ``r``."""
    return 2.0 * math.cos(2.0 * r) / math.sin(2.0 * r)


def tube_shape_template(k: int, r: float) -> list[tuple[float, int]]:
    """Principal curvatures of the tube with multiplicities, ascending."""
    return sorted(
        [
            (tube_reeb_curvature(r), 1),
            (0.0, 2),
            (-math.tan(r), 2 * k - 2),
            (1.0 / math.tan(r), 2 * k - 2),
        ]
    )


def tube_jacobi_template(k: int, r: float) -> list[tuple[float, int]]:
    """Spectrum of the structure Jacobi operator on the tube, ascending.

    Follows from the closed form of the operator on the tube eigenspaces:
    ``1 + alpha lambda`` on each curvature-``lambda`` block and zero on
    ``xi``, ``A xi`` and ``A N``.
    """
    return sorted(
        [
            (0.0, 3),
            (math.tan(r) ** 2, 2 * k - 2),
            (1.0 / math.tan(r) ** 2, 2 * k - 2),
        ]
    )


def _complex_pair_columns(model: TangentModel, z_indices: list[int]) -> np.ndarray:
    """Orthonormal basis of the complex span of the listed ``Z`` directions."""
    cols = [model.zvec(i) for i in z_indices] + [model.jzvec(i) for i in z_indices]
    return np.column_stack(cols)


def _swapped_blocks(model: TangentModel, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Complementary invariant blocks exchanged by the conjugation.

    Spanned by ``(Z_a +- J Z_b) / sqrt(2)`` combinations, so the conjugation
    maps one block onto the other while both stay complex subspaces.
    """
    w1, w2 = [], []
    for j in range(1, k):
        a = model.zvec(2 + j)
        b = model.zvec(k + 1 + j)
        Ja, Jb = model.J @ a, model.J @ b
        w1 += [(a + Jb) / math.sqrt(2.0), (Ja - b) / math.sqrt(2.0)]
        w2 += [(a - Jb) / math.sqrt(2.0), (Ja + b) / math.sqrt(2.0)]
    return np.column_stack(w1), np.column_stack(w2)


def build_tube(
    k: int,
    r: float,
    non_vanishing: bool = True,
    swap_conjugation: bool = False,
) -> TubeModel:
    """Construct the tube of radius ``r`` in the quadric of complex dimension ``2k``.

    Args:
        k: at least 2 (the invariant blocks must be nonempty).
        r: radius in ``(0, pi/2)``.
        non_vanishing: refuse ``r = pi/4`` (vanishing Reeb curvature).
        swap_conjugation: realize the invariant blocks so the conjugation
            exchanges them instead of preserving each; all pointwise
            identities are insensitive to this choice.

    Raises:
        InvalidDimensionError: if ``k < 2``.
        ExcludedParameterError: if ``r`` is out of range, or equals ``pi/4``
            while ``non_vanishing`` is set.
        ModelValidationError: if a build-time invariant fails (never for
            admissible parameters).
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool) or k < 2:
        raise InvalidDimensionError(f"tube requires integer k >= 2, got {k!r}")
    if not (0.0 < r < math.pi / 2.0):
        raise ExcludedParameterError(f"radius must lie in (0, pi/2), got r = {r!r}")
    if non_vanishing and abs(r - math.pi / 4.0) < 1e-9:
        raise ExcludedParameterError(
            f"radius r = {r:.12g} is excluded: the Reeb curvature 2*cot(2r) vanishes at pi/4"
        )

    m = 2 * k
    model = build_tangent_model(m)
    sqrt2 = math.sqrt(2.0)
    N = (model.zvec(1) + model.jzvec(2)) / sqrt2
    xi = (model.zvec(2) - model.jzvec(1)) / sqrt2
    A_xi = (model.zvec(2) + model.jzvec(1)) / sqrt2
    A_N = (model.zvec(1) - model.jzvec(2)) / sqrt2

    if swap_conjugation:
        W1, W2 = _swapped_blocks(model, k)
    else:
        W1 = _complex_pair_columns(model, list(range(3, k + 2)))
        W2 = _complex_pair_columns(model, list(range(k + 2, 2 * k + 1)))

    alpha = tube_reeb_curvature(r)
    S = (
        alpha * np.outer(xi, xi)
        + (-math.tan(r)) * (W1 @ W1.T)
        + (1.0 / math.tan(r)) * (W2 @ W2.T)
    )
    h = induce_from_normal(model, N, S)

    # Build-time invariants of the family.
    invariants = {
        "normal not isotropic": abs(h.split.g_axixi),
        "A N not tangent": abs(float(h.split.A_N @ N)),
        "Reeb direction mismatch": float(np.max(np.abs(h.xi - xi))),
        "shape operator does not kill A xi": float(np.linalg.norm(S @ A_xi)),
        "shape operator does not kill A N": float(np.linalg.norm(S @ A_N)),
        "Reeb flow not isometric": float(np.max(np.abs(h.phi @ S - S @ h.phi))),
        "not Hopf": float(np.linalg.norm(S @ xi - alpha * xi)),
    }
    for label, err in invariants.items():
        if err > 1e-12:
            raise ModelValidationError(f"tube(k={k}, r={r:.6g}): {label} (defect {err:.3e})")

    bases = {"xi": xi[:, None], "A_xi": A_xi[:, None], "A_N": A_N[:, None], "W1": W1, "W2": W2}
    return TubeModel(k=int(k), r=float(r), h=h, alpha=alpha, bases=bases)


def restrict_to_frame(M: np.ndarray, frame: np.ndarray) -> np.ndarray:
    """Matrix of an operator in the given orthonormal frame."""
    return frame.T @ M @ frame


def tube_structure_jacobi_spectrum(tube: TubeModel, tol: float = 1e-12) -> SpectrumReport:
    """Spectrum of the structure Jacobi operator restricted to the tube's tangent space."""
    R = structure_jacobi(tube.h)
    return sym_eigen(restrict_to_frame(R, tube.h.frame), tol=tol)


def default_radius_grid(points: int = 20) -> list[float]:
    """Radii used by the verification suites.

    Uniform in ``(0.05, pi/2 - 0.05)`` with the window of half-width
    ``RADIUS_EXCLUSION_HALFWIDTH`` around ``pi/4`` removed.
    """
    grid = np.linspace(0.05, math.pi / 2.0 - 0.05, points)
    return [float(r) for r in grid if abs(r - math.pi / 4.0) >= RADIUS_EXCLUSION_HALFWIDTH]


def paired_curvature(alpha: float, lam: float) -> float:
    """Partner principal curvature ``(alpha lam + 2) / (2 lam - alpha)``.

    For a Hopf hypersurface with singular normal, the image under the
    structure tensor of a curvature-``lam`` direction in the invariant
    subbundle is again principal, with this curvature.

    Raises:
        ExcludedParameterError: if ``2 lam = alpha`` (never attained by
            consistent data).
    """
    denom = 2.0 * lam - alpha
    if abs(denom) < 1e-9:
        raise ExcludedParameterError(f"2*lambda = alpha is excluded (lambda = {lam!r})")
    return (alpha * lam + 2.0) / denom


def perturbed_tube(
    k: int,
    r: float,
    rng: np.random.Generator,
    spread: float = 2.0,
) -> HypersurfaceData:
    """Isotropic Hopf data in the tube frame with re-drawn principal curvatures.

    Each complex pair of the invariant complement gets an independent random
    curvature together with its partner under :func:`paired_curvature`, so
    the pointwise Hopf consistency identities continue to hold while the
    Reeb flow is generically no longer isometric.
    """
    tube = build_tube(k, r)
    model = tube.h.model
    alpha = tube.alpha
    xi = tube.h.xi
    S = alpha * np.outer(xi, xi)
    for i in range(3, 2 * k + 1):
        lam = float(rng.uniform(-spread, spread))
        while abs(2.0 * lam - alpha) < 0.2:
            lam = float(rng.uniform(-spread, spread))
        mu = paired_curvature(alpha, lam)
        x = model.zvec(i)
        jx = model.jzvec(i)
        S += lam * np.outer(x, x) + mu * np.outer(jx, jx)
    return induce_from_normal(model, tube.h.N, S)


def random_hopf_data(
    m: int,
    rng: np.random.Generator,
    kind: str = "generic",
    alpha: float | None = None,
) -> HypersurfaceData:
    """Random Hopf data with a normal of the requested singular type.

    ``kind`` is one of ``"generic"``, ``"principal"``, ``"isotropic"``.  The
    shape operator is a random self-adjoint operator on the complement of
    the Reeb direction plus ``alpha`` on the Reeb direction itself.
    """
    model = build_tangent_model(m)
    dim = model.dim
    if kind == "generic":
        N = rng.standard_normal(dim)
        N /= np.linalg.norm(N)
    elif kind == "principal":
        v = rng.standard_normal(m)
        v /= np.linalg.norm(v)
        v = np.concatenate([v, np.zeros(m)])
        s = float(rng.uniform(0.0, math.pi))
        N = math.cos(s) * v + math.sin(s) * (model.J @ v)
    elif kind == "isotropic":
        v = rng.standard_normal(m)
        v /= np.linalg.norm(v)
        w = rng.standard_normal(m)
        w -= (w @ v) * v
        w /= np.linalg.norm(w)
        v = np.concatenate([v, np.zeros(m)])
        w = np.concatenate([w, np.zeros(m)])
        N = (v + model.J @ w) / math.sqrt(2.0)
    else:
        raise ValueError(f"unknown normal kind {kind!r}")

    xi = -(model.J @ N)
    if alpha is None:
        alpha = float(rng.uniform(0.3, 2.5) * rng.choice([-1.0, 1.0]))
    P = np.eye(dim) - np.outer(N, N)
    Q = P - np.outer(xi, xi)
    raw = rng.standard_normal((dim, dim))
    S = alpha * np.outer(xi, xi) + Q @ (0.5 * (raw + raw.T)) @ Q
    return induce_from_normal(model, N, S)


# ---------------------------------------------------------------------------
# Principal-normal candidates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrincipalCandidate:
    """Synthetic Hopf data with principal normal (``A N = N``, ``A xi = -xi``).

    ``conj_c`` is the conjugation used by the derived-equation suite on the
    maximal complex subbundle; it equals the model conjugation unless the
    identity block was imposed for the contradiction analysis.  ``imposed``
    records which constraints shaped the candidate.
    """

    h: HypersurfaceData
    conj_c: np.ndarray
    imposed: tuple[str, ...]

    @property
    def alpha(self) -> float:
        return self.h.alpha

    def complex_subbundle_frame(self) -> np.ndarray:
        """Orthonormal basis of the maximal complex subbundle, one per column."""
        model = self.h.model
        cols = [model.zvec(i) for i in range(2, model.m + 1)]
        cols += [model.jzvec(i) for i in range(2, model.m + 1)]
        return np.column_stack(cols)


def build_principal_candidate(
    m: int,
    alpha: float,
    curvatures: list[float] | None = None,
    pair: bool = True,
    identity_conjugation: bool = False,
    fix_conjugation_range: bool = False,
) -> PrincipalCandidate:
    """Build a principal-normal Hopf candidate with prescribed shape spectrum.

    Args:
        m: complex dimension (>= 3 for the suites).
        alpha: nonzero Reeb curvature.
        curvatures: eigenvalues on the complex subbundle.  With ``pair``
            set, one value per complex direction; its partner direction gets
            :func:`paired_curvature`.  Without ``pair``, an explicit list of
            ``2(m-1)`` values.  Defaults to ones (paired).
        identity_conjugation: impose the identity block on the complex
            subbundle for the derived-equation suite.
        fix_conjugation_range: force the shape operator to map into the
            fixed space of the conjugation (zero on the anti-fixed block),
            the pointwise consequence of differentiating ``A N = N``.

    Raises:
        ExcludedParameterError: if ``alpha`` is zero, or a paired curvature
            hits the excluded value ``alpha / 2``.
    """
    if alpha == 0.0:
        raise ExcludedParameterError("alpha must be nonzero (non-vanishing geodesic Reeb flow)")
    model = build_tangent_model(m)
    N = model.zvec(1)
    xi = -model.jzvec(1)

    if curvatures is None:
        curvatures = [1.0] * (m - 1)
    imposed: list[str] = []
    S = alpha * np.outer(xi, xi)
    if fix_conjugation_range:
        if len(curvatures) != m - 1:
            raise ModelValidationError(f"expected {m - 1} curvatures, got {len(curvatures)}")
        for j, lam in enumerate(curvatures, start=2):
            z = model.zvec(j)
            S += lam * np.outer(z, z)
        imposed.append("conjugation-fixed-range")
    elif pair:
        if len(curvatures) != m - 1:
            raise ModelValidationError(f"expected {m - 1} curvatures, got {len(curvatures)}")
        for j, lam in enumerate(curvatures, start=2):
            mu = paired_curvature(alpha, lam)
            z, jz = model.zvec(j), model.jzvec(j)
            S += lam * np.outer(z, z) + mu * np.outer(jz, jz)
        imposed.append("partner-pairing")
    else:
        if len(curvatures) != 2 * (m - 1):
            raise ModelValidationError(f"expected {2 * (m - 1)} curvatures, got {len(curvatures)}")
        for j in range(2, m + 1):
            z, jz = model.zvec(j), model.jzvec(j)
            S += curvatures[j - 2] * np.outer(z, z)
            S += curvatures[m - 1 + j - 2] * np.outer(jz, jz)

    h = induce_from_normal(model, N, S)
    if identity_conjugation:
        conj_c = np.eye(model.dim) - 2.0 * np.outer(xi, xi)
        imposed.append("identity-conjugation")
    else:
        conj_c = model.A
    return PrincipalCandidate(h=h, conj_c=conj_c, imposed=tuple(imposed))


def reeb_parallel_principal_candidate(m: int, alpha: float) -> PrincipalCandidate:
    """Principal candidate whose structure Jacobi operator is Reeb parallel.

    On each complex pair the curvatures solve the reduced first-order system
    (``lam`` a root of ``x^2 - (alpha + 6/alpha) x + 2``, partner
    ``lam - 6/alpha``); such data cannot satisfy the quadratic Hopf identity,
    which is the pointwise face of the nonexistence result.
    """
    if alpha == 0.0:
        raise ExcludedParameterError("alpha must be nonzero (non-vanishing geodesic Reeb flow)")
    s = alpha + 6.0 / alpha
    lam = 0.5 * (s + math.sqrt(s * s - 8.0))
    mu = lam - 6.0 / alpha
    curvatures = [lam] * (m - 1) + [mu] * (m - 1)
    return build_principal_candidate(m, alpha, curvatures, pair=False)
