"""Homology of congruence subgroups of SL(n,Z) with character-twisted
coefficients over finite fields, Hecke eigenpackets, and matching against
direct sums of known Galois-representation constituents."""

__version__ = "0.1.0"
