"""Exact tools for derived polynomials, Lorentzian certification and Hodge-Riemann checks."""

from .polyring import Polynomial, parse_polynomial, serialize

__all__ = ["Polynomial", "parse_polynomial", "serialize"]
__version__ = "0.1.0"
