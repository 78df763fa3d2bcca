import sys

from iterode.cli import main

sys.exit(main())
