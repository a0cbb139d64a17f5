import sys

from braidcover.cli import main

sys.exit(main())
