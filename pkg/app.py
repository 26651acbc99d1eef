import sys

from src.prmweights.cli import main

if __name__ == "__main__":
    sys.exit(main())
