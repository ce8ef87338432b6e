import sys

from ascent_lab.cli import main

sys.exit(main())
