"""Halin graphs and their Turan numbers for forbidden cycles."""

__version__ = "0.1.0"
