"""Projective planes over GF(p^h), their p-ary codes, and antipodal-plane search."""

__version__ = "0.1.0"
