"""Entry point for python -m pgroupcount.cli."""

import sys

from pgroupcount.cli.main import main  # pragma: no cover

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())  # pragma: no cover
