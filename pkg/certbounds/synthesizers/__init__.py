# -*- coding: utf-8 -*-
"""
certbounds.synthesizers
-----------------------

This package provides seeded simulators of rated outcomes:
    * Correlated loan pools with tranching

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# allow lazy loading
from . import pool
