"""Extension of an invertible operator on a subspace to the full space.

The extension acts as the original operator on V and as multiplication by
1/norm(inverse) on the orthogonal complement. That scalar choice preserves
both the operator norm and the norm of the inverse, and it keeps Hermitian
inputs Hermitian, which is what makes the extended square roots downstream
behave like genuine square roots on the span.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import SingularAction
from .types import DEFAULT_TOL, SubspaceOperator, Svd, Tolerances


def _action_svd(phi: SubspaceOperator, tol: Tolerances) -> Svd:
    dec = linalg.svd(phi.action, tol)
    s = dec.singulars
    if s[0] <= 0.0 or s[-1] <= tol.rank_rel * s[0]:
        raise SingularAction("the action matrix is singular at the working rank threshold")
    return dec


def extend_operator(phi: SubspaceOperator, tol: Tolerances | None = None) -> np.ndarray:
    """The full-space operator agreeing with phi on V and scaling V-perp.

    The complement scale is the smallest singular value of the action, so the
    norms of the extension and of its inverse match the subspace operator's.
    """
    tol = tol or DEFAULT_TOL
    dec = _action_svd(phi, tol)
    vb = phi.v_basis
    n = phi.ambient_dim
    core = vb @ phi.action @ vb.conj().T
    if phi.subspace_dim == n:
        return core
    proj = vb @ vb.conj().T
    return core + float(dec.singulars[-1]) * (np.eye(n) - proj)


def extended_inverse(phi: SubspaceOperator, tol: Tolerances | None = None) -> np.ndarray:
    """The inverse of extend_operator(phi), assembled directly.

    Inverts the action on V and scales V-perp by norm(action inverse).
    """
    tol = tol or DEFAULT_TOL
    dec = _action_svd(phi, tol)
    act_inv = (dec.right / dec.singulars) @ dec.left.conj().T
    vb = phi.v_basis
    n = phi.ambient_dim
    core = vb @ act_inv @ vb.conj().T
    if phi.subspace_dim == n:
        return core
    proj = vb @ vb.conj().T
    return core + (1.0 / float(dec.singulars[-1])) * (np.eye(n) - proj)
