"""Riesz dual constructions, certificates, recovery, and pair decisions.

The type-I dual of a sequence transfers its whole singular-value multiset to
the dual sequence, which is the finite form of the duality principle. The
type-III dual composes the Parsevalized type-I dual with a norm-constrained
operator Q; choosing Q as the extended square root of the dual's own frame
operator makes the relation symmetric, and that choice is what the
certificate here witnesses: two orthonormal bases plus the extended square
root reproducing the dual sequence column by column.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import extension, frames, linalg
from .errors import (
    BoundsMismatch,
    CertificationFailed,
    DimensionMismatch,
    NotHermitian,
    NotPsd,
    QInverseTooLarge,
    QSingular,
    QTooLarge,
    RankMismatch,
    SingularAction,
    ZeroSequence,
)
from .types import (
    DEFAULT_TOL,
    FrameBounds,
    OrthonormalBasis,
    RIESZ_BASIS,
    SubspaceOperator,
    Tolerances,
    VectorSeq,
    as_operator,
)


@dataclass(frozen=True)
class QOperator:
    """An invertible operator whose norms fit inside given frame bounds."""

    q: np.ndarray
    validated_against: FrameBounds

    def __post_init__(self):
        object.__setattr__(self, "q", as_operator(self.q))


@dataclass(frozen=True)
class RDualCertificate:
    """Witness that omega is the symmetrical type-III dual of some sequence.

    Holds the two orthonormal bases and the extended square root of the
    dual's frame operator; residual is the verification defect of the
    reproduction identity.
    """

    e_basis: OrthonormalBasis
    h_basis: OrthonormalBasis
    s_omega_sqrt_ext: np.ndarray
    residual: float

    def __post_init__(self):
        object.__setattr__(self, "s_omega_sqrt_ext", as_operator(self.s_omega_sqrt_ext))


@dataclass(frozen=True)
class AntiunitaryWitness:
    """Acts as x -> unitary_part @ conj(x): entrywise conjugation, then a unitary."""

    unitary_part: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "unitary_part", as_operator(self.unitary_part))

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.unitary_part @ np.conj(x)


@dataclass(frozen=True)
class PairDecision:
    """Outcome of the type-I pair test with the verifying witnesses when true.

    spectra are frame-operator eigenvalues, descending. The two residual
    fields record how well the constructed bases reproduce omega and how well
    the antiunitary witness conjugates one frame operator into the other.
    """

    is_pair: bool
    spectra_f: np.ndarray
    spectra_omega: np.ndarray
    witness: AntiunitaryWitness | None
    bases: tuple[OrthonormalBasis, OrthonormalBasis] | None
    type1_residual: float | None
    conjugation_residual: float | None


def _require_same_dim(*dims: int):
    if len(set(dims)) != 1:
        raise DimensionMismatch(f"dimensions differ: {dims}")


def _bounds_close(a: FrameBounds, b: FrameBounds, cert_rel: float) -> bool:
    # relative comparison against the larger value of each pair
    low_ok = abs(a.lower - b.lower) <= cert_rel * max(a.lower, b.lower)
    up_ok = abs(a.upper - b.upper) <= cert_rel * max(a.upper, b.upper)
    return low_ok and up_ok


def rdual_type_I(f: VectorSeq, e: OrthonormalBasis, h: OrthonormalBasis) -> VectorSeq:
    """Dual sequence whose j-th vector expands f's j-th analysis row in the h basis."""
    _require_same_dim(f.dim, e.dim, h.dim)
    coeff = e.mat.conj().T @ f.mat
    return VectorSeq(h.mat @ coeff.T)


def validate_q(q, s_f, tol: Tolerances | None = None) -> QOperator:
    """Check the two norm inequalities tying Q to the frame operator s_f.

    norm(Q) may not exceed the square root of the largest eigenvalue and
    norm(Q^-1) may not exceed the square root of the inverse smallest nonzero
    eigenvalue; a (1 + cert_rel) slack absorbs roundoff at the boundary.
    """
    tol = tol or DEFAULT_TOL
    q = as_operator(q)
    dec = linalg.hermitian_eig(s_f, tol)
    lam = dec.eigenvalues
    scale = max(abs(lam[0]), abs(lam[-1]))
    if lam[-1] <= 0.0:
        raise ZeroSequence("the frame operator is zero; no Q can be validated")
    if lam[0] < -tol.rank_rel * scale:
        raise NotPsd("s_f must be positive semidefinite")
    nonzero = lam[lam > tol.rank_rel * lam[-1]]
    upper = float(lam[-1])
    lower = float(nonzero[0])

    sv = linalg.svd(q, tol).singulars
    if sv[0] <= 0.0 or sv[-1] <= tol.rank_rel * sv[0]:
        raise QSingular("Q is singular at the working rank threshold")
    slack = 1.0 + tol.cert_rel
    if sv[0] > np.sqrt(upper) * slack:
        raise QTooLarge(f"norm(Q) = {sv[0]:.6g} exceeds sqrt(upper bound) = {np.sqrt(upper):.6g}")
    if 1.0 / sv[-1] > slack / np.sqrt(lower):
        raise QInverseTooLarge(
            f"norm(Q^-1) = {1.0 / sv[-1]:.6g} exceeds sqrt(1/lower bound) = {1.0 / np.sqrt(lower):.6g}"
        )
    return QOperator(q=q, validated_against=FrameBounds(lower=lower, upper=upper))


def rdual_type_III(
    f: VectorSeq, e: OrthonormalBasis, h: OrthonormalBasis, q: QOperator, tol: Tolerances | None = None
) -> VectorSeq:
    """Type-III dual: the Parsevalized type-I dual with Q applied to the h side."""
    tol = tol or DEFAULT_TOL
    _require_same_dim(f.dim, e.dim, h.dim, q.q.shape[0])
    if not _bounds_close(frames.optimal_bounds(f, tol), q.validated_against, tol.cert_rel):
        raise BoundsMismatch("Q was validated against a different frame operator")
    g = frames.parsevalize(f, tol)
    coeff = e.mat.conj().T @ g.mat
    return VectorSeq(q.q @ h.mat @ coeff.T)


def recover_type_III(
    omega: VectorSeq,
    e: OrthonormalBasis,
    h: OrthonormalBasis,
    q: QOperator,
    s_f_sqrt,
    tol: Tolerances | None = None,
) -> VectorSeq:
    """Invert the type-III construction given the triple and the square root of S_f."""
    tol = tol or DEFAULT_TOL
    s_f_sqrt = as_operator(s_f_sqrt)
    _require_same_dim(omega.dim, e.dim, h.dim, q.q.shape[0], s_f_sqrt.shape[0])
    if np.linalg.norm(s_f_sqrt - s_f_sqrt.conj().T) > tol.exact_rel * max(1.0, np.linalg.norm(s_f_sqrt)):
        raise NotHermitian("s_f_sqrt must be Hermitian")
    try:
        q_inv = linalg.inverse(q.q, tol)
    except SingularAction as exc:
        raise QSingular(str(exc)) from exc
    coeff = h.mat.conj().T @ q_inv @ omega.mat
    return VectorSeq(s_f_sqrt @ e.mat @ coeff.T)


def certify_symmetrical_pair(f: VectorSeq, omega: VectorSeq, tol: Tolerances | None = None) -> RDualCertificate:
    """Construct and verify the symmetrical type-III relation between f and omega.

    Requires equal ranks and equal optimal bounds. The bases come from
    aligning the SVDs of the two Parsevalized sequences; the operator is the
    square root of omega's frame operator extended from span(omega). The
    returned residual measures the reproduction of omega and must sit inside
    the certification budget.
    """
    tol = tol or DEFAULT_TOL
    _require_same_dim(f.dim, omega.dim)
    n = f.dim
    dec_f = linalg.svd(f.mat, tol)
    dec_w = linalg.svd(omega.mat, tol)
    rank_f = linalg.numerical_rank(dec_f.singulars, tol.rank_rel)
    rank_w = linalg.numerical_rank(dec_w.singulars, tol.rank_rel)
    if rank_f != rank_w:
        raise RankMismatch(f"ranks differ: {rank_f} vs {rank_w}")
    if rank_f == 0:
        raise ZeroSequence("cannot certify a pair of zero sequences")
    bounds_f = FrameBounds(float(dec_f.singulars[rank_f - 1] ** 2), float(dec_f.singulars[0] ** 2))
    bounds_w = FrameBounds(float(dec_w.singulars[rank_w - 1] ** 2), float(dec_w.singulars[0] ** 2))
    if not _bounds_close(bounds_f, bounds_w, tol.cert_rel):
        raise BoundsMismatch(
            f"optimal bounds differ: ({bounds_f.lower:.6g}, {bounds_f.upper:.6g})"
            f" vs ({bounds_w.lower:.6g}, {bounds_w.upper:.6g})"
        )

    g = frames.parsevalize(f, tol)
    u = frames.parsevalize(omega, tol)
    dec_g = linalg.svd(g.mat, tol)
    dec_u = linalg.svd(u.mat, tol)
    # align the two 1/0 singular patterns so u = h_mat @ g_mat^T @ conj(e_mat)
    e_mat = dec_g.left @ dec_u.right.T
    h_mat = dec_u.left @ dec_g.right.T
    e_basis = OrthonormalBasis(VectorSeq(e_mat), tol=tol)
    h_basis = OrthonormalBasis(VectorSeq(h_mat), tol=tol)

    span_w = dec_w.left[:, :rank_w]
    sqrt_w = linalg.psd_sqrt(frames.frame_operator(omega), tol)
    action = span_w.conj().T @ sqrt_w @ span_w
    ext = extension.extend_operator(SubspaceOperator(n, span_w, action, tol=tol), tol)

    coeff = e_mat.conj().T @ g.mat
    reproduced = ext @ h_mat @ coeff.T
    residual = float(np.linalg.norm(omega.mat - reproduced))
    budget = tol.cert_rel * max(1.0, float(np.linalg.norm(omega.mat)))
    if residual > budget:
        raise CertificationFailed(f"reproduction residual {residual:.3e} exceeds budget {budget:.3e}")
    return RDualCertificate(e_basis=e_basis, h_basis=h_basis, s_omega_sqrt_ext=ext, residual=residual)


def _ext_inverse(cert: RDualCertificate, tol: Tolerances) -> np.ndarray:
    ext = cert.s_omega_sqrt_ext
    if np.linalg.norm(ext - ext.conj().T) > tol.exact_rel * max(1.0, np.linalg.norm(ext)):
        raise CertificationFailed("certificate operator is not Hermitian")
    try:
        return linalg.inverse(ext, tol)
    except SingularAction as exc:
        raise CertificationFailed(f"certificate operator is not invertible: {exc}") from exc


def recover_symmetrical(omega: VectorSeq, cert: RDualCertificate, s_f_sqrt, tol: Tolerances | None = None) -> VectorSeq:
    """Recover the original sequence from its symmetrical dual and certificate.

    This is the type-III recovery formula with Q taken as the certificate's
    extended square root, whose adjoint inverse is its plain inverse.
    """
    tol = tol or DEFAULT_TOL
    s_f_sqrt = as_operator(s_f_sqrt)
    _require_same_dim(omega.dim, cert.e_basis.dim, cert.h_basis.dim, s_f_sqrt.shape[0])
    ext_inv = _ext_inverse(cert, tol)
    coeff = cert.h_basis.mat.conj().T @ ext_inv @ omega.mat
    return VectorSeq(s_f_sqrt @ cert.e_basis.mat @ coeff.T)


def gamma_sequence(f: VectorSeq, cert: RDualCertificate, tol: Tolerances | None = None) -> VectorSeq:
    """The dual companion sequence biorthogonal to omega for Riesz bases.

    Columns are the inverse extended square root applied to the Parsevalized
    type-I dual of f under the certificate bases.
    """
    tol = tol or DEFAULT_TOL
    _require_same_dim(f.dim, cert.e_basis.dim)
    g = frames.parsevalize(f, tol)
    ext_inv = _ext_inverse(cert, tol)
    coeff = cert.e_basis.mat.conj().T @ g.mat
    return VectorSeq(ext_inv @ cert.h_basis.mat @ coeff.T)


def coefficient_identity_check(
    f: VectorSeq, omega: VectorSeq, cert: RDualCertificate, tol: Tolerances | None = None
) -> float:
    """Largest deviation between the two coefficient readings of the dual relation.

    Compares <inv_sqrt_ext omega_j, h_i> against <parsevalized f_i, e_j> over
    all index pairs; valid certificates keep this at roundoff level.
    """
    tol = tol or DEFAULT_TOL
    _require_same_dim(f.dim, omega.dim, cert.e_basis.dim)
    ext_inv = _ext_inverse(cert, tol)
    lhs = cert.h_basis.mat.conj().T @ ext_inv @ omega.mat
    g = frames.parsevalize(f, tol)
    rhs = (cert.e_basis.mat.conj().T @ g.mat).T
    return float(np.max(np.abs(lhs - rhs)))


def decide_type_I_pair(f: VectorSeq, omega: VectorSeq, tol: Tolerances | None = None) -> PairDecision:
    """Decide whether omega is a type-I dual of f for some pair of bases.

    In the square model the decision reduces to agreement of the full
    singular-value multisets (zeros included, which carries the kernel
    dimension condition). On success the aligned bases reproduce omega and an
    antiunitary witness conjugates one frame operator into the other.
    """
    tol = tol or DEFAULT_TOL
    _require_same_dim(f.dim, omega.dim)
    dec_f = linalg.svd(f.mat, tol)
    dec_w = linalg.svd(omega.mat, tol)
    spectra_f = dec_f.singulars**2
    spectra_w = dec_w.singulars**2
    gap = float(np.max(np.abs(dec_f.singulars - dec_w.singulars)))
    if gap > tol.cert_rel * max(1.0, float(dec_f.singulars[0])):
        return PairDecision(
            is_pair=False,
            spectra_f=spectra_f,
            spectra_omega=spectra_w,
            witness=None,
            bases=None,
            type1_residual=None,
            conjugation_residual=None,
        )

    e_mat = dec_f.left @ dec_w.right.T
    h_mat = dec_w.left @ dec_f.right.T
    e_basis = OrthonormalBasis(VectorSeq(e_mat), tol=tol)
    h_basis = OrthonormalBasis(VectorSeq(h_mat), tol=tol)
    reproduced = h_mat @ (e_mat.conj().T @ f.mat).T
    type1_residual = float(np.linalg.norm(omega.mat - reproduced))

    s_f = frames.frame_operator(f)
    s_w = frames.frame_operator(omega)
    eig_f = linalg.hermitian_eig(s_f, tol)
    eig_w = linalg.hermitian_eig(s_w, tol)
    unitary_part = eig_w.vectors @ eig_f.vectors.T
    witness = AntiunitaryWitness(unitary_part=unitary_part)
    conj_residual = float(np.linalg.norm(s_w @ unitary_part - unitary_part @ np.conj(s_f)))

    return PairDecision(
        is_pair=True,
        spectra_f=spectra_f,
        spectra_omega=spectra_w,
        witness=witness,
        bases=(e_basis, h_basis),
        type1_residual=type1_residual,
        conjugation_residual=conj_residual,
    )
