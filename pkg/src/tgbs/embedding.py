"""Graph-to-sampler embedding: Takagi factorization, squeezing rescale, thresholds.

A symmetric real matrix A factors as A = U diag(lambda) U^T with unitary U and
non-negative lambda. The columns of U program the interferometer and the
lambdas, after rescaling to a target mean photon number, set the per-mode
squeezing strengths r_m = atanh(c * lambda_m).
"""

from __future__ import annotations

import dataclasses
import json

import numpy as np

from .graphs import Graph

__all__ = [
    "NoSignalError",
    "TakagiFactors",
    "EmbeddedProblem",
    "takagi_decompose",
    "rescale_to_mean_photon",
    "weighted_encode",
    "embed",
]

_SYMMETRY_TOL = 1e-12


class NoSignalError(ValueError):
    """Raised when a matrix has no nonzero singular values (edgeless graph)."""


@dataclasses.dataclass(frozen=True)
class TakagiFactors:
    """Unitary U and non-negative lambdas with A = U diag(lambda) U^T."""

    unitary: np.ndarray
    lambdas: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.unitary * self.lambdas) @ self.unitary.T


@dataclasses.dataclass(frozen=True)
class EmbeddedProblem:
    """A fully programmed threshold-sampler run for one graph problem."""

    unitary: np.ndarray
    squeeze: np.ndarray
    scale: float
    thresholds: np.ndarray
    mean_photon_target: float
    lambdas: np.ndarray

    @property
    def mode_count(self) -> int:
        return self.unitary.shape[0]

    def to_json(self) -> str:
        doc = {
            "unitary": [
                [[float(z.real), float(z.imag)] for z in row] for row in self.unitary
            ],
            "squeeze": self.squeeze.tolist(),
            "scale": self.scale,
            "thresholds": self.thresholds.tolist(),
            "mean_photon_target": self.mean_photon_target,
            "lambdas": self.lambdas.tolist(),
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "EmbeddedProblem":
        doc = json.loads(text)
        u = np.array(
            [[complex(re, im) for re, im in row] for row in doc["unitary"]]
        )
        return cls(
            unitary=u,
            squeeze=np.array(doc["squeeze"]),
            scale=float(doc["scale"]),
            thresholds=np.array(doc["thresholds"]),
            mean_photon_target=float(doc["mean_photon_target"]),
            lambdas=np.array(doc["lambdas"]),
        )


def takagi_decompose(a: np.ndarray) -> TakagiFactors:
    """Takagi factorization of a real symmetric matrix.

    Uses the real eigendecomposition: lambdas are |eigenvalue| and each
    eigenvector column of the negative branch absorbs a phase of i, so that
    U diag(lambda) U^T reproduces A. Columns are ordered by descending lambda.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("input must be a square matrix")
    if np.max(np.abs(a - a.T), initial=0.0) >= _SYMMETRY_TOL:
        raise ValueError("input matrix is not symmetric")
    eigvals, eigvecs = np.linalg.eigh(a)
    lambdas = np.abs(eigvals)
    phases = np.where(eigvals < 0, 1j, 1.0 + 0j)
    unitary = eigvecs.astype(complex) * phases
    order = np.argsort(-lambdas, kind="stable")
    return TakagiFactors(unitary[:, order], lambdas[order])


def mean_photon_number(r: np.ndarray) -> float:
    """Total mean photon number sum_m sinh^2(r_m)."""
    return float(np.sum(np.sinh(r) ** 2))


def rescale_to_mean_photon(
    lambdas: np.ndarray, nbar_target: float, max_iter: int = 200
) -> tuple[float, np.ndarray]:
    """Find c in (0, 1/lambda_max) with sum (c l)^2 / (1 - (c l)^2) = nbar_target.

    The left-hand side grows strictly with c and diverges as c approaches
    1/lambda_max, so bisection on a bracketing interval always converges.
    Returns (c, r) with r_m = atanh(c * lambda_m).
    """
    lambdas = np.asarray(lambdas, dtype=float)
    if nbar_target <= 0:
        raise ValueError("target mean photon number must be positive")
    lam_max = float(lambdas.max(initial=0.0))
    if lam_max == 0.0:
        raise NoSignalError("all lambdas are zero; nothing to embed")

    def nbar(c: float) -> float:
        x = (c * lambdas) ** 2
        return float(np.sum(x / (1.0 - x)))

    lo, hi = 0.0, (1.0 - 1e-15) / lam_max
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        val = nbar(mid)
        if abs(val - nbar_target) <= 1e-12 * nbar_target:
            lo = hi = mid
            break
        if val < nbar_target:
            lo = mid
        else:
            hi = mid
    c = 0.5 * (lo + hi)
    if abs(nbar(c) - nbar_target) > 1e-10 * nbar_target:
        raise RuntimeError("mean-photon rescaling did not converge")
    return c, np.arctanh(c * lambdas)


def weighted_encode(g: Graph, alpha: float = 1.0) -> np.ndarray:
    """Weight-aware encoding Omega (D - A) Omega with Omega = diag(1 + alpha w).

    D - A is the combinatorial Laplacian built from unweighted degrees.
    """
    if g.node_weights is None:
        raise ValueError("weighted encoding requires node weights")
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    mask = g.edge_mask().astype(float)
    lap = np.diag(mask.sum(axis=1)) - mask
    omega = 1.0 + alpha * g.node_weights
    return lap * np.outer(omega, omega)


def embed(a: np.ndarray, nbar_target: float, gamma: float = 1.0) -> EmbeddedProblem:
    """Decompose, rescale to the target mean photon number, and set thresholds."""
    if gamma < 0:
        raise ValueError("threshold gamma must be non-negative")
    factors = takagi_decompose(a)
    c, r = rescale_to_mean_photon(factors.lambdas, nbar_target)
    m = factors.unitary.shape[0]
    return EmbeddedProblem(
        unitary=factors.unitary,
        squeeze=r,
        scale=c,
        thresholds=np.full(m, float(gamma)),
        mean_photon_target=float(nbar_target),
        lambdas=factors.lambdas,
    )
