"""Integration tests for the propernet command line."""
