import sys

from egyfrac.cli import main

sys.exit(main())
