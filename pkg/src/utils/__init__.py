"""
Package initialization for utils.
"""
