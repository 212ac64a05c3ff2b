"""Unit tests for propernet components."""
