import sys

from zetaforge.cli import main

sys.exit(main())
