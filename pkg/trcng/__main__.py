import sys

from trcng.main import main

sys.exit(main())
