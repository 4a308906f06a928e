"""Shared domain types and dimension theory."""
