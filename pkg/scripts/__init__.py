"""Utility scripts for setup and maintenance."""

