"""
Recovering exact structure from floating-point matrices
=======================================================

Float input goes through a complex embedding, eigenvalue clustering, and
rank profiling to recover the exact Jordan data — then the exact machinery
takes over.  Defective eigenvalues scatter like eps^(1/m) in floats, so the
clustering widens its radius adaptively and keeps the longest-lived reading.
"""
import numpy as np

from quatrev.canonical import JordanSpec, jordan_matrix
from quatrev.numeric import (classify_numeric, jordan_spec_numeric,
                             phi_embed_float, qmatrix_to_float)
from quatrev.scalar import gr

rng = np.random.default_rng(11)


def conjugate_with_noise(spec):
    """Hide the Jordan form behind a random integer change of basis."""
    from fractions import Fraction
    from quatrev.matrix import QMatrix, qdet
    from quatrev.scalar import Quaternion
    n = spec.total_size
    while True:
        s = QMatrix([[Quaternion(*(Fraction(int(x)) for x in
                                   rng.integers(-3, 4, size=4)))
                      for _ in range(n)] for _ in range(n)])
        if qdet(s) != 0:
            return qmatrix_to_float(s.inverse() * jordan_matrix(spec) * s)


# a defective spec: a size-2 block at the unit i plus a reciprocal pair
spec = JordanSpec.of([(gr(0, 1), 2), (gr(2), 1), (gr("1/2"), 1)])
f = conjugate_with_noise(spec)
print("hidden spec     :", spec)
print("float input shape:", f.shape, "(n x n x 4 quaternion components)")

# the embedding doubles the size; its eigenvalues come in conjugate pairs,
# and the size-2 block smears its pair over a disc of radius ~1e-8
eigs = np.linalg.eigvals(phi_embed_float(f))
print("\nraw embedded spectrum:")
for z in sorted(eigs, key=lambda z: (round(z.real, 3), round(z.imag, 3))):
    print(f"    {z.real:+.12f} {z.imag:+.12f}j")

# recovery clusters the smear, validates multiplicities against rank
# profiles of the shifted powers, and snaps the cluster means
got, snap = jordan_spec_numeric(f, candidates=[gr(0, 1), gr(2), gr("1/2")])
print("\nrecovered spec  :", got)
print("recovered == hidden:", got == spec)
print("snap report      :", snap.to_json())

# one call does recovery plus classification
out = classify_numeric(f)
print("\nclassification of the float matrix:")
print("  reversible        :", out["classification"]["reversible"])
print("  strongly reversible:", out["classification"]["strongly_reversible"])
print("  approximate        :", out["approximate"])

# irrational input cannot snap: it is flagged and classified advisorily
weird = np.zeros((2, 2, 4))
weird[0, 0, 0] = np.pi
weird[1, 1, 0] = 1.0 / np.pi
out2 = classify_numeric(weird)
print("\npi and 1/pi on the diagonal:")
print("  approximate:", out2["approximate"],
      "  reversible (advisory):", out2["classification"]["reversible"])
