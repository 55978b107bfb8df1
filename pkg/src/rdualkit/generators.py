"""Seeded construction of test sequences: random bases and prescribed spectra.

All randomness flows through numpy's default generator (PCG64) seeded
explicitly, so a given (kind, n, seed) triple reproduces the same sequence
bit for bit within one numpy version.
"""

from __future__ import annotations

import numpy as np

from .errors import BadSpec
from .types import VectorSeq

ONB = "onb"
SPECTRUM = "spectrum"
KINDS = (ONB, SPECTRUM)


def _orthonormalize(a: np.ndarray) -> np.ndarray:
    """Gram-Schmidt on the columns, two passes per column for orthogonality."""
    n = a.shape[0]
    out = np.array(a, dtype=complex)
    for j in range(n):
        v = out[:, j]
        for _ in range(2):
            for i in range(j):
                v = v - out[:, i] * np.vdot(out[:, i], v)
        norm = np.sqrt(np.real(np.vdot(v, v)))
        if norm <= 1e-12 * np.sqrt(float(n)):
            raise BadSpec("the drawn array is numerically rank deficient; pick another seed")
        out[:, j] = v / norm
    return out


def random_onb(n: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormalized complex Gaussian array, columns form the basis."""
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return _orthonormalize(a)


def generate_sequence(n: int, kind: str, singular_values=None, seed: int = 0) -> VectorSeq:
    """Seeded sequence of the requested kind.

    kind "onb" orthonormalizes a complex Gaussian draw; kind "spectrum"
    builds P diag(sv) Q* from two independent random bases, padding the given
    values with zeros up to dimension n.
    """
    if not isinstance(n, int) or n < 1:
        raise BadSpec(f"dimension must be a positive integer, got {n!r}")
    if kind not in KINDS:
        raise BadSpec(f"kind must be one of {KINDS}, got {kind!r}")
    rng = np.random.default_rng(seed)
    if kind == ONB:
        if singular_values is not None:
            raise BadSpec("singular values apply only to kind 'spectrum'")
        return VectorSeq(random_onb(n, rng))

    if singular_values is None:
        raise BadSpec("kind 'spectrum' needs singular values")
    sv = np.asarray(singular_values, dtype=float)
    if sv.ndim != 1 or len(sv) < 1:
        raise BadSpec("singular values must be a nonempty flat list")
    if len(sv) > n:
        raise BadSpec(f"got {len(sv)} singular values for dimension {n}")
    if np.any(sv < 0.0) or not np.all(np.isfinite(sv)):
        raise BadSpec("singular values must be finite and nonnegative")
    pad = np.zeros(n)
    pad[: len(sv)] = sv
    p = random_onb(n, rng)
    q = random_onb(n, rng)
    return VectorSeq(p @ np.diag(pad) @ q.conj().T)
