"""
User Interface Module
Command-line front end.

Usage:
    python -m src.ui.cli reproduce
    # or
    python main.py reproduce
"""

from .cli import CLI, main

__all__ = ["CLI", "main"]
