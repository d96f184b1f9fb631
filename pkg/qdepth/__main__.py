import sys

from qdepth.cli.main import main

sys.exit(main())
