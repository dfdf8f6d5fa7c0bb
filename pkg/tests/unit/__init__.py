"""Unit tests for sbihari."""
