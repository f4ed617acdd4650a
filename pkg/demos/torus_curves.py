"""
Simple closed curves on the punctured torus: classical traces from 2x2
matrices along the spine, quantum traces from the Farey skein recursion,
and their agreement at q = 1.
"""
from math import gcd

from teichlab import classical, fatgraph, qgeo

G = fatgraph.torus_spine()
shear = {"X": 0.4, "Y": -0.3, "Z": 0.7}
z = [shear[l] for l in "XYZ"]

print("slope    word              |tr| classical      quantum at q=1   terms")
for n in range(1, 8):
    for m1 in range(n + 1):
        m2 = n - m1
        if gcd(m1, m2) != 1:
            continue
        w = fatgraph.slope_word(m1, m2)
        t = abs(classical.geodesic_trace(G, fatgraph.slope_path(m1, m2), shear))
        Q = qgeo.torus_curve_trace(m1, m2)
        print("%d/%d  %-18s %18.10f %18.10f   %d"
              % (m1, m2, w, t, Q.at_q1().evaluate(z), len(Q.terms)))

# the Weyl-ordered strand sum and the skein recursion part ways at slope 2/3
w = fatgraph.slope_word(2, 3)
print("\nstrand sum equals skein trace at 2/3:",
      qgeo.torus_word_trace(w) == qgeo.torus_curve_trace(2, 3))
print("twist naturality along the unzipping of 2/3:", qgeo.naturality_check(2, 3)[0])
