"""
Service layer tests.
"""

