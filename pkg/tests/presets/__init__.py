"""
Preset layer tests.
"""
