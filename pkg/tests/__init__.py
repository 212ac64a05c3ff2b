"""Test package for propernet."""
