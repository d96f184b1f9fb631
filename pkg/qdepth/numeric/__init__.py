"""Shared exact-integer helpers."""

from qdepth.numeric.binomial import binom, binom_row, falling_factorial

__all__ = ["binom", "binom_row", "falling_factorial"]
