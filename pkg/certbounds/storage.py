# -*- coding: utf-8 -*-
"""
certbounds.storage
------------------

This module provides the data storage methods: JSON and CSV files, bundled
scenario data, and serialized simulation outcomes.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import json
import os

# 3rd party
import joblib
import pandas as pd

# local
from . import discrete, utils

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


def serialize(data, path, compress=3):
    """Serialize data and save to a file using joblib.

    Parameters
    ----------
    data : object
        Object to serialize, e.g. simulated outcomes.
    path : str
        Destination path.
    compress : int, optional
        Compression level; from 0 to 9 (highest compression).

    """

    # normalize path
    path = utils.normpath(path)

    joblib.dump(data, path, compress=compress)


def deserialize(path):
    """Deserialize data from a file using joblib.

    Parameters
    ----------
    path : str
        Source path.

    Returns
    -------
    data : object
        Deserialized object.

    """

    # normalize path
    path = utils.normpath(path)

    return joblib.load(path)


def dumpJSON(data, path):
    """Save JSON data to a file.

    Output is indented, key order is preserved, and non-finite floats are
    refused, so that equal data always give identical bytes.

    Parameters
    ----------
    data : dict
        The JSON data to dump.
    path : str
        Destination path.

    """

    # normalize path
    path = utils.normpath(path)

    with open(path, 'w', encoding='utf-8', newline='\n') as fid:
        json.dump(data, fid, indent=2, allow_nan=False, ensure_ascii=False)
        fid.write('\n')


def loadJSON(path):
    """Load JSON data from a file.

    Parameters
    ----------
    path : str
        Source path.

    Returns
    -------
    data : dict
        The loaded JSON data.

    """

    # normalize path
    path = utils.normpath(path)

    with open(path, 'r', encoding='utf-8') as fid:
        return json.load(fid)


def write_csv(table, path):
    """Write a table to a CSV file.

    Parameters
    ----------
    table : pandas.DataFrame
        Table to write; the index is dropped.
    path : str
        Destination path.

    """

    # normalize path
    path = utils.normpath(path)

    table.to_csv(path, index=False, lineterminator='\n')


def load_csv(path):
    """Load a CSV table.

    Parameters
    ----------
    path : str
        Source path.

    Returns
    -------
    table : pandas.DataFrame
        The loaded table.

    """

    # normalize path
    path = utils.normpath(path)

    return pd.read_csv(path)


def data_path(name):
    """Path of a bundled data file.

    Parameters
    ----------
    name : str
        File name inside the package data folder.

    Returns
    -------
    path : str
        Absolute path.

    """

    return os.path.join(DATA_DIR, name)


def load_data(name):
    """Load a bundled JSON data file.

    Parameters
    ----------
    name : str
        File name inside the package data folder, e.g. 'scenarios.json'.

    Returns
    -------
    data : dict
        The loaded JSON data.

    """

    return loadJSON(data_path(name))


def load_space(path):
    """Load a discrete signal space from a JSON file.

    Parameters
    ----------
    path : str
        Source path; the file holds aligned "symbols", "p0" and "p1" lists.

    Returns
    -------
    space : DiscreteSignalSpace
        The signal space.

    """

    return discrete.DiscreteSignalSpace.from_dict(loadJSON(path))
