"""
Test suite for Generic Forest Lab
"""
