"""gghecke - Test Suite"""
