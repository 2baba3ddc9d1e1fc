import sys

from wcgen.cli import main

sys.exit(main())
