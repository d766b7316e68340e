import sys

from hypersum.cli import main

sys.exit(main())
