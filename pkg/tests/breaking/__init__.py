"""
Symmetry breaking layer tests.
"""
