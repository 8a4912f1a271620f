"""
Reversing conjugators and two-involution factorizations
=======================================================

Positive classifications come with explicit witnesses: a conjugator g with
g A g^-1 = A^-1 (or -A^-1), checked exactly on construction, plus the
induced factorization of A into two involutions or two skew-involutions.
"""
from quatrev.canonical import JordanSpec, jordan_matrix
from quatrev.decompose import (product_two_involutions,
                               product_two_skew_involutions,
                               verify_certificate)
from quatrev.matrix import QMatrix, qdet
from quatrev.reversers import (FLAVOR_INVOLUTION, FLAVOR_SKEW,
                               TARGET_INVERSE, TARGET_NEG_INVERSE,
                               assemble_reverser, block_reverser)
from quatrev.scalar import gr


def show(name, m):
    print(f"{name} =")
    for i in range(m.n_rows):
        print("   ", "  ".join(str(m.entry(i, j)) for j in range(m.n_cols)))


# the single-block building brick: an upper-triangular matrix that
# intertwines the block at 1/lam with the inverse of the block at lam
om = block_reverser(gr(2), 3)
show("omega(2, 3)", om)

# a reciprocal pair of blocks, reversed by an involution
spec = JordanSpec.of([(gr(2), 2), (gr("1/2"), 2)])
a = jordan_matrix(spec)
cert = assemble_reverser(spec, TARGET_INVERSE, FLAVOR_INVOLUTION)
print("\nspec:", spec)
print("certificate flavor:", cert.flavor)
print("g A g^-1 == A^-1:", cert.g * a == a.inverse() * cert.g)
print("g^2 == I:", cert.g * cert.g == QMatrix.identity(4))
print("qdet(g):", qdet(cert.g))

# the certificate immediately yields A as a product of two involutions
fact = product_two_involutions(a, cert)
print("s1^2:", fact.s1_square, " s2^2:", fact.s2_square,
      " s1*s2 == A:", fact.s1 * fact.s2 == a)

# every reversible element also splits into two SKEW-involutions
# (squares -I), even when no involution works
lone_unit = JordanSpec.of([(gr("3/5", "4/5"), 1)])
a2 = jordan_matrix(lone_unit)
skew = assemble_reverser(lone_unit, TARGET_INVERSE, FLAVOR_SKEW)
fact2 = product_two_skew_involutions(a2, skew)
print("\nlone unit block:", lone_unit)
show("skew conjugator g", skew.g)
print("s1^2:", fact2.s1_square, " s2^2:", fact2.s2_square,
      " s1*s2 == A:", fact2.s1 * fact2.s2 == a2)

# conjugation onto the NEGATED inverse: here i is its own partner
neg_spec = JordanSpec.of([(gr(0, 1), 3)])
a3 = jordan_matrix(neg_spec)
neg = assemble_reverser(neg_spec, TARGET_NEG_INVERSE, FLAVOR_INVOLUTION)
show("\ninvolution h with h A h^-1 = -A^-1", neg.g)
print("h A h^-1 == -A^-1:", neg.g * a3 == -(a3.inverse()) * neg.g)

# certificates serialize; verification recomputes everything from scratch
doc = neg.to_json()
report = verify_certificate(a3, type(neg).from_json(doc))
print("\nindependent re-verification:", report.to_json())
