"""
A real symmetric matrix with exactly the spectrum of the 4-parameter model.

h = [[r cos(theta), s cos(alpha)], [s cos(alpha), r cos(theta)]] has
eigenvalues r cos(theta) +- s cos(alpha), the same as H, in both regimes
r > s and r < s. Its eigenvectors are (1, +-1)/sqrt(2) for every point.
"""

import numpy as np

from pt2x2 import Params4, equiv_expectation, equivalent_h, isospectral_gap
from pt2x2.models import PhaseKind, classify

np.set_printoptions(precision=6, suppress=True)

rng = np.random.default_rng(7)
worst = {"r>s": 0.0, "r<s": 0.0}
count = 0
while count < 2000:
    p = Params4(rng.uniform(0, 2), rng.uniform(0.1, 2), rng.uniform(0, np.pi))
    if classify(p).kind is not PhaseKind.UNBROKEN:
        continue
    key = "r>s" if p.r > p.s else "r<s"
    worst[key] = max(worst[key], isospectral_gap(p))
    count += 1
print("worst eigenvalue gap over 2000 unbroken points:", worst)

p = Params4(0.6, 1.0, np.pi / 2)
eq = equivalent_h(p)
print("h at r=0.6, s=1, theta=pi/2:\n", eq.matrix.real)
print("<Phi+|h|Phi+> =", equiv_expectation(p, "plus"), " <Phi-|h|Phi-> =", equiv_expectation(p, "minus"))
