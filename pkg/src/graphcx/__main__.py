import sys

from graphcx.workbench.cli import main

sys.exit(main())
