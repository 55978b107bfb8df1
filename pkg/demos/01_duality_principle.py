"""
Duality: a sequence and its dual share one singular-value multiset
==================================================================

The type-I dual rewrites the analysis coefficients of a sequence in a second
orthonormal basis. Whatever spectrum the original synthesis matrix has, the
dual's matrix has the same one, so frame bounds, rank, and the Riesz basis
property all carry over. This script builds a random example and prints the
transfer.
"""

import numpy as np

from rdualkit import frames, generators, rduals
from rdualkit.types import OrthonormalBasis, VectorSeq

rng_seed = 42

# a sequence with a prescribed spectrum, and two random orthonormal bases
f = generators.generate_sequence(4, "spectrum", singular_values=[2.0, 1.5, 1.2, 0.8], seed=rng_seed)
e = OrthonormalBasis(generators.generate_sequence(4, "onb", seed=rng_seed + 1))
h = OrthonormalBasis(generators.generate_sequence(4, "onb", seed=rng_seed + 2))

omega = rduals.rdual_type_I(f, e, h)

print("singular values of f:    ", np.round(np.linalg.svd(f.mat, compute_uv=False), 6))
print("singular values of omega:", np.round(np.linalg.svd(omega.mat, compute_uv=False), 6))

info_f = frames.classify(f)
info_w = frames.classify(omega)
print("f:     kind=%s rank=%d bounds=(%.4f, %.4f)" % (info_f.kind, info_f.rank, info_f.bounds.lower, info_f.bounds.upper))
print("omega: kind=%s rank=%d bounds=(%.4f, %.4f)" % (info_w.kind, info_w.rank, info_w.bounds.lower, info_w.bounds.upper))

# the transfer also preserves rank deficiency: drop one singular value to zero
g = generators.generate_sequence(4, "spectrum", singular_values=[2.0, 1.5, 1.2], seed=rng_seed + 3)
omega_g = rduals.rdual_type_I(g, e, h)
print("rank-deficient source:", frames.classify(g).kind, "-> dual:", frames.classify(omega_g).kind)

# deciding the relation in reverse: given only the two sequences, find bases
decision = rduals.decide_type_I_pair(f, omega)
print("decide_type_I_pair: is_pair=%s, reproduction residual %.2e" % (decision.is_pair, decision.type1_residual))
