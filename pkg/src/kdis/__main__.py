import sys

from kdis.cli import main

sys.exit(main())
