"""
Potential layer tests.
"""
