"""
Exact scalar arithmetic
=======================

Everything in the library runs on arbitrary-precision rationals: complex
numbers are pairs of fractions, quaternions are 4-tuples, and no identity
below is approximate.
"""
from fractions import Fraction

from quatrev.scalar import (Q_I, Q_J, Q_K, Quaternion, class_rep,
                            class_rep_inverse, class_rep_neg_inverse, gr,
                            parse_complex, quat)

# complex rationals parse from compact literals
lam = parse_complex("3/5+4/5i")
print("lambda          =", lam)
print("|lambda|^2      =", lam.norm_sq())         # exactly 1: a unit
print("lambda^-1       =", lam.inverse())         # the conjugate, since |.|=1

# quaternions multiply by the Hamilton rules; i*j = k, j*i = -k
print("\ni*j =", Q_I * Q_J, "   j*i =", Q_J * Q_I, "   k^2 =", Q_K * Q_K)

q = quat("1/2", 1, 0, -2)      # 1/2 + i - 2k
print("q               =", q)
print("q * q^-1        =", q * q.inverse())

# the key anti-commutation rule behind everything quaternionic here:
# j pulls a complex number past itself by conjugating it
z = gr("2/3", "5")
print("\nj * z           =", Q_J * z.to_quaternion())
print("conj(z) * j     =", z.conjugate().to_quaternion() * Q_J)

# right eigenvalue classes: each similarity class of quaternion eigenvalues
# contains exactly one complex number with non-negative imaginary part
print("\nclass_rep(2-3i) =", class_rep(gr(2, -3)))

# the classes of the inverse and of the negated inverse drive the whole
# classification; only the class of i is fixed by the second map
for text in ("2", "1+i", "3/5+4/5i", "i"):
    v = parse_complex(text)
    print(f"rep [{text}^-1] = {class_rep_inverse(v)};   "
          f"rep [-({text})^-1] = {class_rep_neg_inverse(v)}")

# exactness means no drift, ever: compound a thousand times and compare
acc = Quaternion(Fraction(1), Fraction(0), Fraction(0), Fraction(0))
for _ in range(1000):
    acc = acc * q
for _ in range(1000):
    acc = acc * q.inverse()
print("\nafter 1000 multiplies and 1000 divides:", acc)
