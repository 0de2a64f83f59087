import sys

from catpre.cli import main

sys.exit(main())
