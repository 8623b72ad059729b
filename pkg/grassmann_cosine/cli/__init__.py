"""Command line interface"""
from .main import CLIApplication, main_cli
