"""Unit tests, one module per library module."""
