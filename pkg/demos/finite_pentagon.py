"""
The finite-dimensional pentagon at hbar = m/n: as stated the product of
five L matrices is not scalar; with inner exponent -4k-2 it is a scalar
of modulus n^(5/2) whose normalized phase is independent of (u, v).
"""
import numpy as np

from teichlab import dilog

for m, n in ((1, 3), (3, 5), (1, 5), (5, 7)):
    rep = dilog.CyclicRep(m, n)
    stated = dilog.pentagon_report(1.0, 1.0, rep)
    shifted = dilog.pentagon_report(1.0, 1.0, rep, shift=-2)
    phases = [np.angle(dilog.normalized_pentagon_phase(u, v, rep)) / np.pi
              for u, v in ((1.0, 1.0), (0.5, 2.0), (3.0, 0.2))]
    print("hbar=%d/%d  stated: dev %.3g, off-scalar %.3g | shifted: off-scalar %.1e, "
          "|c|/n^2.5 = %.12f, phase/pi %s"
          % (m, n, stated["deviation"], stated["scalar_deviation"],
             shifted["scalar_deviation"], shifted["scalar_modulus"] / n ** 2.5,
             ", ".join("%.6f" % p for p in phases)))
