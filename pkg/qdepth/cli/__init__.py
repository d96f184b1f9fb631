"""
Command-line interface for qdepth.
"""

from qdepth.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
