#!/usr/bin/env python3
"""
Main entry point for the Grassmann cosine transform toolkit
"""
import os
import sys

# Setup path for imports
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from grassmann_cosine.cli import main_cli

if __name__ == "__main__":
    sys.exit(main_cli())
