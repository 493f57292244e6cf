"""Exact K-group computations for A_theta twisted by Z_2, Z_3, Z_4, Z_6 and by
free or amalgamated gluings of those cyclic groups."""

__version__ = "0.1.0"
