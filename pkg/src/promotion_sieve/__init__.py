"""Exact promotion, charge and cyclic sieving on Young tableaux."""
