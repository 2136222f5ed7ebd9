"""
Package initialization for models.
"""