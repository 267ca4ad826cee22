#!/usr/bin/env python3
"""
ymh-vacuum - Main Entry Point

Vacuum structure, mass spectra and discrete vacuum-pair classification
for Yang-Mills-Higgs models.
"""

import sys

from app.cli import main

if __name__ == "__main__":
    sys.exit(main())
