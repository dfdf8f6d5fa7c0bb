"""Integration tests for sbihari."""
