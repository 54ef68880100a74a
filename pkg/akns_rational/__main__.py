import sys

from akns_rational.cli.main import main

sys.exit(main())
