"""
The positive polar factor of the 4-parameter model and what its spectrum says.

H = U R with R = sqrt(H^H H). For r > s and r < s the factor has two explicit
Hermitian forms whose eigenvalues are r + s and |r - s|. Those numbers are
not the eigenvalues of H, and the gap grows with theta.
"""

import math

import numpy as np

from pt2x2 import Params4, build_h4, polar, regime_operator, regime_spectral_discrepancy, spectrum_h5

np.set_printoptions(precision=4, suppress=True)

for p in (Params4(1.0, 0.5, math.pi / 12), Params4(0.6, 1.0, math.pi / 2)):
    h = build_h4(p)
    f = polar(h)
    op = regime_operator(p)
    print(f"r={p.r}, s={p.s}, theta={p.theta:.4f}  regime {op.regime.value}")
    print("R from sqrt(H^H H):\n", f.r)
    print("closed form:\n", op.matrix)
    print("|U R - H| =", np.linalg.norm(f.u @ f.r - h))
    print("R eigenvalues", op.eigs, " H eigenvalues", tuple(e.real for e in spectrum_h5(p)))
    print()

print("gap between R and H spectra along theta (r=1.2, s=0.7)")
for theta in np.linspace(0, 0.6, 7):
    p = Params4(1.2, 0.7, float(theta))
    gp, gm = regime_spectral_discrepancy(p)
    print(f"  theta={theta:.2f}  gap+={gp:.4f}  gap-={gm:.4f}")
