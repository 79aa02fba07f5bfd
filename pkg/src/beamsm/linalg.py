"""Complex dense kernels shared by the recursive least squares updates.

Every adaptive recursion in this package maintains an inverse correlation
matrix P through scaled rank-one updates.  The two kernels below implement
one such step: ``gain_vector`` forms the gain k = P x / (1 + lam * x^H P x)
and ``inverse_update`` applies P' = P - lam * k x^H P.  For lam > 0 the pair
realizes the matrix inversion lemma, i.e. P' = (P^{-1} + lam * x x^H)^{-1}.

All functions are pure: inputs are never modified.
"""

from __future__ import annotations

import numpy as np

from .numerics import SINGULARITY_EPS


class SingularUpdateError(ArithmeticError):
    """Raised when a rank-one update denominator is numerically zero."""

    def __init__(self, denominator: complex, snapshot: int | None = None):
        self.denominator = denominator
        self.snapshot = snapshot
        where = f" at snapshot {snapshot}" if snapshot is not None else ""
        super().__init__(
            f"singular rank-one update{where}: |1 + lam * x^H P x| = "
            f"{abs(denominator):.3e}"
        )


def _as_square(p: np.ndarray, name: str = "P") -> np.ndarray:
    p = np.asarray(p, dtype=np.complex128)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValueError(f"{name} must be square, got shape {p.shape}")
    return p


def gain_vector(
    p: np.ndarray,
    x: np.ndarray,
    lambda1: float,
    snapshot: int | None = None,
) -> np.ndarray:
    """Gain k = P x / (1 + lambda1 * x^H P x).

    Parameters
    ----------
    p : (n, n) complex ndarray
        Current inverse correlation matrix.
    x : (n,) complex ndarray
        Input vector.
    lambda1 : float
        Update weight (forgetting-factor role); lambda1 = 0 reduces the
        gain to P x.
    snapshot : int, optional
        Snapshot index included in the error message if the denominator
        is singular.

    Raises
    ------
    SingularUpdateError
        If |1 + lambda1 * x^H P x| falls below the singularity guard.
    """
    p = _as_square(p)
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (p.shape[0],):
        raise ValueError(f"x has shape {x.shape}, expected ({p.shape[0]},)")
    px = p @ x
    denom = 1.0 + lambda1 * (x.conj() @ px)
    if abs(denom) <= SINGULARITY_EPS:
        raise SingularUpdateError(denom, snapshot)
    return px / denom


def inverse_update(
    p: np.ndarray,
    k: np.ndarray,
    x: np.ndarray,
    lambda1: float,
) -> np.ndarray:
    """Rank-one inverse update P' = P - lambda1 * k x^H P.

    With ``k`` produced by :func:`gain_vector` for the same (P, x, lambda1)
    and lambda1 > 0, the result equals (P^{-1} + lambda1 * x x^H)^{-1}.
    """
    p = _as_square(p)
    k = np.asarray(k, dtype=np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    n = p.shape[0]
    if k.shape != (n,) or x.shape != (n,):
        raise ValueError(
            f"shape mismatch: P is {p.shape}, k is {k.shape}, x is {x.shape}"
        )
    if lambda1 == 0.0:
        return p.copy()
    return p - lambda1 * np.outer(k, x.conj() @ p)


def hermitian_regularize(m: np.ndarray) -> np.ndarray:
    """Project a square matrix onto its Hermitian part, (M + M^H) / 2.

    A no-op for exactly Hermitian input; applied after every rank-one
    update to stop round-off from drifting P away from symmetry over long
    recursions.
    """
    m = _as_square(m, "M")
    return 0.5 * (m + m.conj().T)


def is_hermitian(m: np.ndarray, tol: float = 1e-12) -> bool:
    """True if M equals its conjugate transpose within ``tol`` elementwise."""
    m = _as_square(m, "M")
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)
