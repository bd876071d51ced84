"""
Candidate eigenpairs of the 5-parameter model only work when s == t.

For each parameter point we build the candidate vectors, apply the matrix and
print how far each row is from the claimed eigenvalue. With s == t every
defect vanishes; with s != t the imaginary parts are (r sin(theta) - t sin(alpha))
and -(r sin(theta) - s sin(alpha)), which cannot both be zero.
"""

import math

from pt2x2 import Params5, alpha_of, eigen_residuals

points = [
    Params5(1.0, 1.0, 1.0, math.pi / 6),
    Params5(1.0, 2.0, 0.5, math.pi / 6),
    Params5(0.4, 1.5, 0.9, 2.0),
    Params5(0.0, 1.5, 0.9, 2.0),
]

print(f"{'r':>5} {'s':>5} {'t':>5} {'theta':>7} {'alpha':>8} {'res+':>10} {'res-':>10}  row defects (plus pair)")
for p in points:
    a = alpha_of(p)
    rep = eigen_residuals(p)
    d1, d2 = rep.row_defects[:2]
    print(
        f"{p.r:5.2f} {p.s:5.2f} {p.t:5.2f} {p.theta:7.4f} {a.alpha:8.4f} "
        f"{rep.residual_plus:10.3e} {rep.residual_minus:10.3e}  {d1:.3f}, {d2:.3f}"
    )

# r = 0 makes alpha = 0: the imaginary defects vanish but the real ones are
# t - sqrt(st) and s - sqrt(st), so the pair is still wrong unless s == t
