"""Shared helpers: seeded random generators and the exhaustive spec sweep."""
import random
from fractions import Fraction

import pytest

from quatrev.canonical import JordanSpec
from quatrev.matrix import CMatrix, QMatrix, qdet
from quatrev.scalar import GaussianRational, Quaternion, gr

# eigenvalue pool used by the sweep: real reciprocal pairs, units, and a
# non-unit complex value whose inverse-class partner is in the pool too
EIG_POOL = (gr(1), gr(-1), gr(2), gr("1/2"), gr(-2), gr("-1/2"),
            gr(0, 1), gr("3/5", "4/5"), gr(1, 1))
SWEEP_MAX_TOTAL = 6


def rng_for(name: str) -> random.Random:
    return random.Random(f"quatrev:{name}")


def rand_fraction(rng, lo=-9, hi=9, max_den=5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_gr(rng, nonzero=False) -> GaussianRational:
    while True:
        x = GaussianRational(rand_fraction(rng), rand_fraction(rng))
        if not (nonzero and x.is_zero):
            return x


def rand_quat(rng, lo=-9, hi=9, max_den=3) -> Quaternion:
    return Quaternion(*(rand_fraction(rng, lo, hi, max_den)
                        for _ in range(4)))


def rand_qmatrix(rng, n, lo=-9, hi=9, max_den=3) -> QMatrix:
    return QMatrix([[rand_quat(rng, lo, hi, max_den) for _ in range(n)]
                    for _ in range(n)])


def rand_invertible(rng, n, lo=-2, hi=2) -> QMatrix:
    """Random integer quaternionic matrix with nonzero determinant."""
    while True:
        m = QMatrix([[Quaternion(*(Fraction(rng.randint(lo, hi))
                                   for _ in range(4)))
                      for _ in range(n)] for _ in range(n)])
        if qdet(m) != 0:
            return m


def cofactor_det(c: CMatrix) -> GaussianRational:
    """Naive Laplace expansion; independent check for the fast determinant."""
    n = c.n_rows
    if n == 1:
        return c.entry(0, 0)
    total = None
    for j in range(n):
        piv = c.entry(0, j)
        if piv.is_zero:
            continue
        minor = CMatrix([[c.entry(r, k) for k in range(n) if k != j]
                         for r in range(1, n)])
        term = piv * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return c.entry(0, 0) - c.entry(0, 0)
    return total


def sweep_blocks(max_total=SWEEP_MAX_TOTAL, pool=EIG_POOL):
    """Every multiset of (eigenvalue, size) blocks with total size bounded."""
    atoms = [(v, s) for v in pool for s in range(1, max_total + 1)]
    out = []

    def rec(start, budget, acc):
        if acc:
            out.append(tuple(acc))
        for k in range(start, len(atoms)):
            v, s = atoms[k]
            if s <= budget:
                acc.append((v, s))
                rec(k, budget - s, acc)
                acc.pop()

    rec(0, max_total, [])
    return out


@pytest.fixture(scope="session")
def sweep_specs():
    return [JordanSpec.of(blocks) for blocks in sweep_blocks()]
