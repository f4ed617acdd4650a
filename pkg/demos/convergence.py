"""
Proper length over graph length along the convergents of a continued
fraction, for a few shears, and the effect of reweighting the edges.
Writes plot-ready CSV to stdout.
"""
import csv
import sys

from teichlab import thurston

targets = {"golden": [1] * 15, "silver": [2] * 15, "mixed": [1, 2, 3] * 5}
shears = [(0.0, 0.0, 0.0), (0.8, -0.5, 0.3), (-1.2, 0.4, 1.0)]

out = csv.writer(sys.stdout)
out.writerow(["target", "shear", "weights", "depth", "m1", "m2", "ratio", "gap"])
for name, cf in targets.items():
    for s in shears:
        for wname, w in (("unit", None), ("Y=3", {"X": 1.0, "Y": 3.0, "Z": 1.0})):
            rows = thurston.converge_ratio(s, cf, weights=w)
            gaps = [""] + thurston.cauchy_gaps(rows)
            for row, gap in zip(rows, gaps):
                k, m1, m2, _, _, _, ratio = row
                out.writerow([name, "%g,%g,%g" % s, wname, k, m1, m2, "%.12g" % ratio, gap])
