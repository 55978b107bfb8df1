"""Frames, frame sequences and Riesz sequences in the square model.

A sequence here is always n vectors in C^n; redundancy shows up as rank
deficiency, a sequence of full rank is simultaneously a frame for the whole
space and a Riesz basis, and any nonzero sequence is a frame sequence for its
span. Optimal frame bounds and optimal Riesz bounds coincide with the extreme
nonzero eigenvalues of the frame operator.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionMismatch, ZeroSequence
from .types import (
    DEFAULT_TOL,
    Classification,
    FrameBounds,
    PROPER_FRAME_SEQUENCE,
    RIESZ_BASIS,
    Tolerances,
    VectorSeq,
    ZERO_SEQUENCE,
)


def frame_operator(s: VectorSeq) -> np.ndarray:
    """S = T T^H for the synthesis matrix T whose columns are the vectors."""
    return s.mat @ s.mat.conj().T


def gram(s: VectorSeq) -> np.ndarray:
    """T^H T; entry (i, j) is <f_j, f_i>."""
    return s.mat.conj().T @ s.mat


def cross_gram(f: VectorSeq, g: VectorSeq) -> np.ndarray:
    """Matrix with entry (i, j) = <f_i, g_j>."""
    if f.dim != g.dim:
        raise DimensionMismatch(f"dimensions differ: {f.dim} vs {g.dim}")
    return f.mat.T @ g.mat.conj()


def _nonzero_singulars(s: VectorSeq, tol: Tolerances):
    dec = linalg.svd(s.mat, tol)
    rank = linalg.numerical_rank(dec.singulars, tol.rank_rel)
    return dec, rank


def optimal_bounds(s: VectorSeq, tol: Tolerances | None = None) -> FrameBounds:
    """Extreme nonzero eigenvalues of the frame operator, as (lower, upper)."""
    tol = tol or DEFAULT_TOL
    dec, rank = _nonzero_singulars(s, tol)
    if rank == 0:
        raise ZeroSequence("a zero sequence has no frame bounds")
    sv = dec.singulars[:rank]
    return FrameBounds(lower=float(sv[-1] ** 2), upper=float(sv[0] ** 2))


def classify(s: VectorSeq, tol: Tolerances | None = None) -> Classification:
    """Rank plus kind plus bounds; bounds are absent only for the zero sequence."""
    tol = tol or DEFAULT_TOL
    dec, rank = _nonzero_singulars(s, tol)
    if rank == 0:
        return Classification(rank=0, kind=ZERO_SEQUENCE, bounds=None)
    sv = dec.singulars[:rank]
    bounds = FrameBounds(lower=float(sv[-1] ** 2), upper=float(sv[0] ** 2))
    kind = RIESZ_BASIS if rank == s.dim else PROPER_FRAME_SEQUENCE
    return Classification(rank=rank, kind=kind, bounds=bounds)


def canonical_dual(s: VectorSeq, tol: Tolerances | None = None) -> VectorSeq:
    """The sequence of pseudo-inverse images of the vectors under the frame operator.

    On span(s) this reproduces every vector from its frame coefficients.
    """
    tol = tol or DEFAULT_TOL
    if np.linalg.norm(s.mat) == 0.0:
        raise ZeroSequence("the zero sequence has no canonical dual")
    r = linalg.psd_pinv_sqrt(frame_operator(s), tol)
    return VectorSeq((r @ r) @ s.mat)


def parsevalize(s: VectorSeq, tol: Tolerances | None = None) -> VectorSeq:
    """Apply the pseudo-inverse square root of the frame operator to each vector.

    The result is a Parseval frame for span(s): its frame operator is the
    orthogonal projection onto the span.
    """
    tol = tol or DEFAULT_TOL
    if np.linalg.norm(s.mat) == 0.0:
        raise ZeroSequence("the zero sequence cannot be normalized")
    return VectorSeq(linalg.psd_pinv_sqrt(frame_operator(s), tol) @ s.mat)


def verify_dual_pair(f: VectorSeq, g: VectorSeq, tol: Tolerances | None = None) -> bool:
    """True when both mixed synthesis identities reproduce the identity operator."""
    tol = tol or DEFAULT_TOL
    if f.dim != g.dim:
        raise DimensionMismatch(f"dimensions differ: {f.dim} vs {g.dim}")
    eye = np.eye(f.dim)
    first = np.linalg.norm(g.mat @ f.mat.conj().T - eye)
    second = np.linalg.norm(f.mat @ g.mat.conj().T - eye)
    return bool(max(first, second) <= tol.cert_rel)
