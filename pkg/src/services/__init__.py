"""
Package initialization for services.
"""
