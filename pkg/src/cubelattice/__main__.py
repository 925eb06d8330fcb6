import sys

from cubelattice.cli import main

sys.exit(main())
