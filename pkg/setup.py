#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
certbounds
----------

Certification-feasibility analytics: Bayes precision bounds, discrimination
ceilings and their verification.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import io
import os

# 3rd party
from setuptools import find_packages, setup

# Package meta-data
NAME = 'certbounds'
DESCRIPTION = 'Bayes bounds and discrimination ceilings for precision claims.'
URL = 'https://github.com/certbounds/certbounds'
EMAIL = 'developers@certbounds.org'
AUTHOR = 'The certbounds developers'
REQUIRES_PYTHON = '>=3.8'
LICENSE = 'BSD 3-clause'

REQUIRED = [
    'click>=7.0',
    'joblib>=0.11',
    'numpy>=1.22.0',
    'pandas>=1.5',
    'scipy>=1.7.0',
]

EXTRAS = {
    'tests': ['pytest'],
    'docs': ['sphinx', 'sphinx_rtd_theme'],
}

HERE = os.path.abspath(os.path.dirname(__file__))


def read_readme():
    try:
        with io.open(os.path.join(HERE, 'README.md'), encoding='utf-8') as fid:
            return '\n' + fid.read()
    except FileNotFoundError:
        return DESCRIPTION


def read_version():
    # read without importing the package
    about = {}
    with io.open(os.path.join(HERE, NAME, '__version__.py'),
                 encoding='utf-8') as fid:
        exec(fid.read(), about)
    return about['__version__']


setup(
    name=NAME,
    version=read_version(),
    description=DESCRIPTION,
    long_description=read_readme(),
    long_description_content_type='text/markdown',
    author=AUTHOR,
    author_email=EMAIL,
    python_requires=REQUIRES_PYTHON,
    url=URL,
    packages=find_packages(exclude=('tests',)),
    package_data={NAME: ['data/*.json']},
    include_package_data=True,
    entry_points={
        'console_scripts': ['certbounds=certbounds.cli:cli'],
    },
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    license=LICENSE,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Financial and Insurance Industry',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Office/Business :: Financial',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
