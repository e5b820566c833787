import sys

from fixcount.cli import main

sys.exit(main())
