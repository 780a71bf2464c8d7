"""
Tests package for probcheck.
"""
