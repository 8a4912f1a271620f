"""
Classifying reversibility from Jordan data
==========================================

A quaternionic matrix is conjugate to its inverse exactly when its Jordan
blocks pair up under eigenvalue inversion.  Whether the conjugation can be
realized by an involution, or onto the negated inverse instead, is decided
by two refinements of the same pairing — all computed here symbolically.
"""
import json

from quatrev.canonical import JordanSpec
from quatrev.classify import classify_psl, odd_unit_classes
from quatrev.scalar import gr

# a spec is a multiset of (eigenvalue, block size) pairs; eigenvalues are
# stored as class representatives and blocks in a fixed canonical order
spec = JordanSpec.of([(gr(2), 1), (gr("1/2"), 1), (gr(0, 1), 2)])
print("spec:", spec)

cls = classify_psl(spec)
print(json.dumps(cls.to_json(), indent=2))

# the witness strings name the pairing (or the first obstruction) so a
# negative answer is as auditable as a positive one
print("\npairing witnesses, one per target:")
print("  inverse     :", cls.witness_pairing["inverse"])
print("  neg inverse :", cls.witness_pairing["neg_inverse"])

# strongly reversible = reversible by an involution.  The obstruction is a
# parity condition: each non-real unit-modulus eigenvalue class must occur
# an even number of times at every block size
one_i_block = JordanSpec.of([(gr(0, 1), 1)])
print("\nJ(i,1):", classify_psl(one_i_block).to_json())
print("odd unit classes of J(i,1):",
      [(str(v), s) for v, s in odd_unit_classes(one_i_block)])

doubled = JordanSpec.of([(gr(0, 1), 1), (gr(0, 1), 1)])
print("doubling the block fixes the parity:",
      classify_psl(doubled).strongly_reversible)

# in the projective group the plain and involution-backed notions collapse:
# projectively reversible = reversible or conjugate to the negated inverse
examples = [
    [(gr(2), 1)],                            # no partner for 2
    [(gr(2), 1), (gr("1/2"), 1)],            # inverse pair
    [(gr(2), 1), (gr("-1/2"), 1)],           # negated-inverse pair
    [(gr(0, 1), 3)],                         # i is its own negated inverse
    [(gr("3/5", "4/5"), 1)],                 # lone non-real unit
]
print("\n%-28s %-11s %-8s %-8s %s" % ("spec", "reversible", "strong",
                                      "negated", "projective"))
for blocks in examples:
    s = JordanSpec.of(blocks)
    c = classify_psl(s)
    print("%-28s %-11s %-8s %-8s %s" % (s, c.reversible,
                                        c.strongly_reversible,
                                        c.neg_reversible, c.psl_reversible))
