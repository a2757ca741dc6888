"""Exact chain-level toolkit for the commutative graph complex."""
