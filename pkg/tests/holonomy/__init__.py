"""
Holonomy layer tests.
"""
