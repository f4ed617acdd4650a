r"""
Shear-coordinate Teichmüller theory on cubic fatgraphs: classical geodesic
functions, their quantum deformation, the quantum dilogarithm, and torus
Thurston dynamics.
"""
__version__ = "0.1.0"
