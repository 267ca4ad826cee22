"""
Representation layer tests.
"""
