"""
Command-line layer tests.
"""
