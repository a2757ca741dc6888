"""Test suite for the graphcx package."""
