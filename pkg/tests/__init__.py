"""
Test package for ymh-vacuum.
"""
