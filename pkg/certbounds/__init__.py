# -*- coding: utf-8 -*-
"""
certbounds
----------

A toolkit for certification-feasibility analysis: Bayes precision bounds,
discrimination ceilings, binormal calibration, correlated pool simulation
and moment-insufficiency constructions.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# get version
from .__version__ import __version__

# allow lazy loading
from . import bounds, binormal, discrete, moments, reports, stats, storage
from .synthesizers import pool
