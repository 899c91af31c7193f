"""Integration tests for gghecke"""
