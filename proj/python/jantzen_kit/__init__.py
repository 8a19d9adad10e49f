"""Jantzen and Andersen sum formulas for Weyl modules, computed three
independent ways through the alcove combinatorics of the affine Weyl group."""

from jantzen_kit._core import Session, nu_p

__all__ = ["Session", "nu_p"]
__version__ = "0.1.0"
