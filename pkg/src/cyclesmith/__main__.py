import sys

from cyclesmith.cli import main

sys.exit(main())
