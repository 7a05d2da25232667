"""Entry point for python -m flagsheaf."""

import sys

from .cli import main

sys.exit(main())
