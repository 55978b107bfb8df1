"""Series representation of the inverse square root through shifted operators.

Start from an orthonormal basis h and a nonzero sequence omega. The cyclic
shift U sends h_i to h_{i+1} (indices mod n); conjugating its powers by the
extended square root of omega's frame operator gives the family V_j, and each
Lambda_k collects the vectors V_j(h_k) into one operator. Weighting the
Lambda_k by a coefficient family and summing is the representation studied
here, with the inverse extended square root as the target.

Two coefficient families are tracked side by side. The a-family holds the
inner products of the inverse square root image of h_0 against the basis and
makes the representation exact up to roundoff. The c-family holds the Gram
inner products of the Parsevalized source sequence against its first member;
its sum is reported without any accuracy claim because away from the Parseval
case its error can be of order one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import extension, frames, linalg
from .errors import CertificationFailed, DimensionMismatch, ZeroSequence
from .types import (
    DEFAULT_TOL,
    OrthonormalBasis,
    SubspaceOperator,
    Tolerances,
    VectorSeq,
    as_operator,
)


@dataclass(frozen=True)
class ShiftFamily:
    """Cyclic shift plus its conjugations by the extended square root.

    v_ops[j] equals s_inv_sqrt_ext @ u^j @ s_sqrt_ext, with v_ops[0] the
    identity; u itself is unitary.
    """

    u: np.ndarray
    v_ops: tuple[np.ndarray, ...]
    s_sqrt_ext: np.ndarray
    s_inv_sqrt_ext: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u", as_operator(self.u))
        object.__setattr__(self, "v_ops", tuple(as_operator(v) for v in self.v_ops))
        object.__setattr__(self, "s_sqrt_ext", as_operator(self.s_sqrt_ext))
        object.__setattr__(self, "s_inv_sqrt_ext", as_operator(self.s_inv_sqrt_ext))

    @property
    def dim(self) -> int:
        return self.u.shape[0]


@dataclass(frozen=True)
class CoefficientReport:
    """The three coefficient families of the representation.

    a[i] = <inv_sqrt_ext h_0, h_i>, c[i] = <g_i, g_0> for the Parsevalized
    source sequence g, and p[i] = <P h_0, h_i> for the orthogonal projection
    P onto the span of omega. l1 values are the sums of moduli.
    """

    a: np.ndarray
    c: np.ndarray
    p: np.ndarray
    l1_a: float
    l1_c: float


@dataclass(frozen=True)
class RepresentationReport:
    """Assembled sums, their errors, and the exact finite tail table.

    errors are operator-norm distances to the inverse extended square root.
    tail_table rows are (prefix_size, partial_error, tail_bound) where the
    bound is the excluded l1 mass of the a-family times sqrt(bessel_sup).
    modulus_gap records max_i ||a_i| - |c_i|| and carries no assertion.
    """

    operator_a: np.ndarray
    operator_c: np.ndarray
    error_a: float
    error_c: float
    bessel_sup: float
    tail_table: tuple[tuple[int, float, float], ...]
    modulus_gap: float

    def __post_init__(self):
        object.__setattr__(self, "operator_a", as_operator(self.operator_a))
        object.__setattr__(self, "operator_c", as_operator(self.operator_c))


def _span_basis(omega: VectorSeq, tol: Tolerances) -> np.ndarray:
    dec = linalg.svd(omega.mat, tol)
    rank = linalg.numerical_rank(dec.singulars, tol.rank_rel)
    if rank == 0:
        raise ZeroSequence("the sequence spans nothing; no shift family exists")
    return dec.left[:, :rank]


def build_shift_family(omega: VectorSeq, h: OrthonormalBasis, tol: Tolerances | None = None) -> ShiftFamily:
    """Cyclic shift on h conjugated by the extended square root of omega.

    The square root of the frame operator is restricted to the span of omega
    and extended to the whole space, so the family is defined even when omega
    is rank deficient.
    """
    tol = tol or DEFAULT_TOL
    if omega.dim != h.dim:
        raise DimensionMismatch(f"dimensions differ: {omega.dim} vs {h.dim}")
    n = omega.dim
    span = _span_basis(omega, tol)
    sqrt_w = linalg.psd_sqrt(frames.frame_operator(omega), tol)
    action = span.conj().T @ sqrt_w @ span
    ext = extension.extend_operator(SubspaceOperator(n, span, action, tol=tol), tol)
    ext_inv = linalg.inverse(ext, tol)

    rolled = np.roll(h.mat, -1, axis=1)
    u = rolled @ h.mat.conj().T

    # u^0 is the identity, so v_ops[0] is exact by definition
    v_ops = [np.eye(n, dtype=complex)]
    power = np.eye(n, dtype=complex)
    for _ in range(1, n):
        power = u @ power
        v_ops.append(ext_inv @ power @ ext)
    return ShiftFamily(u=u, v_ops=tuple(v_ops), s_sqrt_ext=ext, s_inv_sqrt_ext=ext_inv)


def lambda_family(fam: ShiftFamily, h: OrthonormalBasis) -> list[np.ndarray]:
    """The operators Lambda_k with Lambda_k(g) = sum_j <g, h_j> V_j(h_k)."""
    if fam.dim != h.dim:
        raise DimensionMismatch(f"dimensions differ: {fam.dim} vs {h.dim}")
    n = h.dim
    analysis = h.mat.conj().T
    out = []
    for k in range(n):
        images = np.column_stack([fam.v_ops[j] @ h.mat[:, k] for j in range(n)])
        out.append(images @ analysis)
    return out


def coefficients(
    f: VectorSeq,
    omega: VectorSeq,
    h: OrthonormalBasis,
    fam: ShiftFamily,
    tol: Tolerances | None = None,
) -> CoefficientReport:
    """All three coefficient families for the pair (f, omega) under the basis h."""
    tol = tol or DEFAULT_TOL
    if len({f.dim, omega.dim, h.dim, fam.dim}) != 1:
        raise DimensionMismatch(
            f"dimensions differ: {f.dim}, {omega.dim}, {h.dim}, {fam.dim}"
        )
    if np.linalg.norm(f.mat) == 0.0:
        raise ZeroSequence("the source sequence is zero; its coefficients vanish")
    h0 = h.mat[:, 0]
    analysis = h.mat.conj().T
    a = analysis @ (fam.s_inv_sqrt_ext @ h0)

    g = frames.parsevalize(f, tol)
    c = frames.gram(g)[0]

    span = _span_basis(omega, tol)
    p = analysis @ (span @ (span.conj().T @ h0))
    return CoefficientReport(
        a=a,
        c=c,
        p=p,
        l1_a=float(np.sum(np.abs(a))),
        l1_c=float(np.sum(np.abs(c))),
    )


def bessel_bound_of_family(vectors: VectorSeq, tol: Tolerances | None = None) -> float:
    """Largest eigenvalue of the family's frame operator, its optimal Bessel bound."""
    tol = tol or DEFAULT_TOL
    dec = linalg.hermitian_eig(frames.frame_operator(vectors), tol)
    return float(max(dec.eigenvalues[-1], 0.0))


def represent_inv_sqrt(
    fam: ShiftFamily,
    lambdas: list[np.ndarray],
    coeffs: CoefficientReport,
    tol: Tolerances | None = None,
) -> RepresentationReport:
    """Sum both coefficient families against the lambdas and measure the errors.

    The a-family sum must land on the inverse extended square root within the
    certification budget, and every prefix of it must respect the tail bound
    (excluded l1 mass times sqrt of the Bessel supremum); violations mean the
    inputs were not built from one another and raise. The c-family sum is
    measured only.
    """
    tol = tol or DEFAULT_TOL
    n = fam.dim
    if len(lambdas) != n or len(coeffs.a) != n:
        raise DimensionMismatch(
            f"expected {n} operators and coefficients, got {len(lambdas)} and {len(coeffs.a)}"
        )
    target = fam.s_inv_sqrt_ext
    lambdas = [as_operator(lam) for lam in lambdas]

    norms = [linalg.operator_norm(lam, tol) for lam in lambdas]
    bessel_sup = float(max(norms) ** 2)

    operator_c = sum(ci * lam for ci, lam in zip(coeffs.c, lambdas))
    error_c = linalg.operator_norm(operator_c - target, tol)

    # walk the prefixes once; the full sum is the last partial
    abs_a = np.abs(coeffs.a)
    rows = []
    partial = np.zeros((n, n), dtype=complex)
    for m in range(1, n + 1):
        partial = partial + coeffs.a[m - 1] * lambdas[m - 1]
        partial_error = linalg.operator_norm(partial - target, tol)
        tail_bound = float(np.sum(abs_a[m:]) * np.sqrt(bessel_sup))
        if partial_error > tail_bound + tol.cert_rel:
            raise CertificationFailed(
                f"prefix {m} misses its tail bound: {partial_error:.3e} > {tail_bound:.3e}"
            )
        rows.append((m, float(partial_error), tail_bound))
    operator_a = partial
    error_a = rows[-1][1]
    if error_a > tol.cert_rel:
        raise CertificationFailed(f"representation error {error_a:.3e} exceeds {tol.cert_rel:.1e}")

    modulus_gap = float(np.max(np.abs(np.abs(coeffs.a) - np.abs(coeffs.c))))
    return RepresentationReport(
        operator_a=operator_a,
        operator_c=operator_c,
        error_a=float(error_a),
        error_c=float(error_c),
        bessel_sup=bessel_sup,
        tail_table=tuple(rows),
        modulus_gap=modulus_gap,
    )
