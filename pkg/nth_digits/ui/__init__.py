"""Command line interface."""

from .cli import CLIInterface, CliConfig, main

__all__ = ['CLIInterface', 'CliConfig', 'main']
