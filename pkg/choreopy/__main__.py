import sys

from choreopy.cli.main import main

sys.exit(main())
