#!/usr/bin/env python3
"""Re-extract the fixtures and fail if they differ from the committed ones."""

import subprocess
import sys
from pathlib import Path

if __name__ == "__main__":
    script = Path(__file__).resolve().with_name("extract_fixtures.py")
    sys.exit(subprocess.call([sys.executable, str(script), "--check", *sys.argv[1:]]))
