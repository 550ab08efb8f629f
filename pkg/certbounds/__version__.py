# -*- coding: utf-8 -*-
"""
certbounds.version
------------------

Version tracker.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

VERSION = (0, 1, 0)
__version__ = ".".join(map(str, VERSION))
