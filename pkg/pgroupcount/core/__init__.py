"""Exact polynomials in p, partitions, and the closed-form counts built from them."""
