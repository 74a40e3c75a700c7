"""
Shared graph builders, hypothesis strategies and JSON fixtures for the tests
"""
