"""Symbolic combinatorics of Arthur parameters for classical p-adic groups.

Exact (float-free) calculators for: pole orders of the normalization factors
of intertwining operators, packet-parameter validation and enumeration,
transfer of a parameter along an enlarged Jordan block, Jacquet-module and
irreducibility criteria, archimedean Gamma-factor bookkeeping, and
holomorphy/residue verdicts for degenerate Eisenstein series.
"""

from __future__ import annotations

__version__ = "0.1.0"
