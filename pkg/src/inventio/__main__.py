import sys

from inventio.cli import main

sys.exit(main())
