import sys

from pancake_clique.cli.main import main

sys.exit(main())
