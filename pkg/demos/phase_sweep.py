"""
Phase diagram of the 4-parameter model on an (r, theta) grid at fixed s.

Writes a CSV sweep to a temporary file, reads it back and prints a coarse
map: '.' unbroken, '#' broken, 'o' exceptional point.
"""

import csv
import math
import tempfile
from pathlib import Path

from pt2x2.report import SweepSpec, write_sweep

spec = SweepSpec(r_range=(0, 2, 21), s_range=(1, 1, 1), theta_range=(0, math.pi, 41), outputs=("r", "theta", "phase"))
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "phase.csv"
    n = write_sweep(spec, path)
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))

symbol = {"Unbroken": ".", "Broken": "#", "ExceptionalPoint": "o"}
print(f"{n} points, s = 1; rows r = 2 .. 0, columns theta = 0 .. pi")
for i in reversed(range(21)):
    line = "".join(symbol[rows[i * 41 + j]["phase"]] for j in range(41))
    print(f"r={float(rows[i * 41]['r']):4.2f} {line}")
