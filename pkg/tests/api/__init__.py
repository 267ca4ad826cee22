"""
API integration tests.
"""

