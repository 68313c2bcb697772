# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""Run the cfdim command line with ``python -m cfdim``."""

import sys

from cfdim.cli import main


sys.exit(main())
