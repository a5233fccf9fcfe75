"""
Moyal star product in two realizations, brackets and algebra diagnostics.
"""
