"""
Discretized phase space, Weyl symbol and operator transforms, Wigner functions.
"""
