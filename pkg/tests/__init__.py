"""Test suite for sbihari package."""
