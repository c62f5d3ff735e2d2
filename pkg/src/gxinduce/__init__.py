"""Induced sectors for G-crossed braided extensions, computed exactly."""
