"""
Classical field theory counterparts: Duffing oscillator, action, lattice Klein-Gordon, covariant formalism.
"""
