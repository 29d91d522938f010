"""Constructive realizations for the converse of Weyl's eigenvalue inequality."""

__version__ = "1.0.0"
__author__ = "iaminov"
