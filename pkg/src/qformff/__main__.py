import sys

from qformff.cli import main

sys.exit(main())
