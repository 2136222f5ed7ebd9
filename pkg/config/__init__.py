"""
Runtime configuration for netprune.
"""
