#!/usr/bin/env python3
"""
GCX entry point
Weighted 2-complexes, their categorical constructions and generalized Coxeter groups.
Run ``python main.py --help`` for the commands (implemented in src/cli.py).
"""

import sys

from dotenv import load_dotenv

from src.cli import main

# Load environment variables from .env file
load_dotenv()

if __name__ == "__main__":
    sys.exit(main())
