"""Test suite for weyl-forge."""
