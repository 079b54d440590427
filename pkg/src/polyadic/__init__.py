"""Polyadic cyclic codes over GF(q) and over the split non-chain ring
GF(q)[u,v]/(f(u), g(v), uv-vu), with the duality-preserving Gray map to
GF(q)-linear codes."""

__version__ = "0.1.0"
