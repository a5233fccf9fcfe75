"""
Green functions from source differentiation of the scattering symbol.
"""
