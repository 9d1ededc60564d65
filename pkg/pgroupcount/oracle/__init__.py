"""Brute-force enumeration of lattices through Hermite and Smith normal forms."""
