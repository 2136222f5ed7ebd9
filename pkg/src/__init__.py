"""
Package initialization for src.
"""