"""
Test suite for the Gaussian Wigner sign-correlation library.
"""
