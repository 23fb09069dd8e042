import sys

from freeknot.cli import main

sys.exit(main())
