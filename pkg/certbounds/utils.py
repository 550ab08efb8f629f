# -*- coding: utf-8 -*-
"""
certbounds.utils
----------------

This module provides the hybrid return object and the argument checks shared
by every other module.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import collections
import keyword
import numbers
import os

# 3rd party
import numpy as np


def normpath(path):
    """Normalize a path.

    Parameters
    ----------
    path : str
        The path to normalize.

    Returns
    -------
    npath : str
        The normalized path.

    """

    if "~" in path:
        out = os.path.abspath(os.path.expanduser(path))
    else:
        out = os.path.abspath(path)

    return out


def check_open_unit(value, name):
    """Ensure a value lies strictly inside (0, 1).

    Parameters
    ----------
    value : int, float
        Value to check.
    name : str
        Parameter name used in the error message.

    Returns
    -------
    value : float
        The value as a float.

    Raises
    ------
    TypeError
        If the value is missing or not a real number.
    ValueError
        If the value is not in the open interval (0, 1).

    """

    value = check_real(value, name)

    if not 0. < value < 1.:
        raise ValueError("%s must lie in the open interval (0, 1), got %r."
                         % (name, value))

    return value


def check_closed_unit(value, name):
    """Ensure a value lies inside [0, 1].

    Parameters
    ----------
    value : int, float
        Value to check.
    name : str
        Parameter name used in the error message.

    Returns
    -------
    value : float
        The value as a float.

    """

    value = check_real(value, name)

    if not 0. <= value <= 1.:
        raise ValueError("%s must lie in [0, 1], got %r." % (name, value))

    return value


def check_discrimination(value, name="lambda_avail", allow_inf=True):
    """Ensure a discrimination ratio is positive (and possibly infinite).

    Parameters
    ----------
    value : int, float
        Discrimination ratio.
    name : str, optional
        Parameter name used in the error message.
    allow_inf : bool, optional
        If True, ``numpy.inf`` is admitted.

    Returns
    -------
    value : float
        The value as a float.

    """

    value = check_real(value, name, allow_inf=allow_inf)

    if np.isnan(value) or value <= 0.:
        raise ValueError("%s must be positive, got %r." % (name, value))

    if np.isinf(value) and not allow_inf:
        raise ValueError("%s must be finite, got %r." % (name, value))

    return value


def check_positive_int(value, name):
    """Ensure a value is a positive integer."""

    if value is None:
        raise TypeError("Please specify %s." % name)

    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError("%s must be an integer, got %r." % (name, value))

    if value < 1:
        raise ValueError("%s must be positive, got %r." % (name, value))

    return int(value)


def check_real(value, name, allow_inf=False):
    # missing values and non-numbers are type errors
    if value is None:
        raise TypeError("Please specify %s." % name)

    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise TypeError("%s must be a real number, got %r." % (name, value))

    value = float(value)

    if np.isnan(value) or (np.isinf(value) and not allow_inf):
        raise ValueError("%s must be finite, got %r." % (name, value))

    return value


def get_rng(random_state=None):
    """Build a numpy random generator.

    Parameters
    ----------
    random_state : None, int, numpy.random.RandomState, numpy.random.Generator, optional
        Seed or generator.

    Returns
    -------
    rng : numpy.random.Generator, numpy.random.RandomState
        Generator to draw from.

    """

    # generators are passed through
    if isinstance(random_state, (np.random.RandomState, np.random.Generator)):
        return random_state

    return np.random.default_rng(random_state)


class ReturnTuple(tuple):
    """A named tuple to use as a hybrid tuple-dict return object.

    Parameters
    ----------
    values : iterable
        Return values.
    names : iterable, optional
        Names for return values.

    Raises
    ------
    ValueError
        If the number of values differs from the number of names.
    ValueError
        If any of the items in names:
        * contain non-alphanumeric characters;
        * are Python keywords;
        * start with a number;
        * are duplicates.

    """

    def __new__(cls, values, names=None):

        return tuple.__new__(cls, tuple(values))

    def __init__(self, values, names=None):

        nargs = len(values)

        if names is None:
            names = ["_%d" % i for i in range(nargs)]
        else:
            if len(names) != nargs:
                raise ValueError("Number of names and values mismatch.")

            names = [str(name) for name in names]

            seen = set()
            for name in names:
                if not all(c.isalnum() or (c == "_") for c in name):
                    raise ValueError("Names can only contain alphanumeric "
                                     "characters and underscores: %r." % name)

                if keyword.iskeyword(name):
                    raise ValueError("Names cannot be a keyword: %r." % name)

                if name[0].isdigit():
                    raise ValueError("Names cannot start with a number: %r."
                                     % name)

                if name in seen:
                    raise ValueError("Encountered duplicate name: %r." % name)

                seen.add(name)

        self._names = names

    def as_dict(self):
        """Convert to an ordered dictionary.

        Returns
        -------
        out : OrderedDict
            An OrderedDict representing the return values.

        """

        return collections.OrderedDict(zip(self._names, self))

    __dict__ = property(as_dict)

    def __getitem__(self, key):
        """Get item as an index or keyword.

        Raises
        ------
        KeyError
            If the key is a string and it does not exist in the mapping.
        IndexError
            If the key is an int and it is out of range.

        """

        if isinstance(key, str):
            if key not in self._names:
                raise KeyError("Unknown key: %r." % key)

            key = self._names.index(key)

        return super(ReturnTuple, self).__getitem__(key)

    def __getattr__(self, name):
        # attribute access for named values
        if name.startswith("_"):
            raise AttributeError(name)

        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

    def __repr__(self):
        """Return representation string."""

        rp = ", ".join("%s=%r" % item for item in zip(self._names, self))

        return "ReturnTuple(%s)" % rp

    def __getnewargs__(self):
        """Return self as a plain tuple; used for copy and pickle."""

        return (tuple(self), )

    def __getstate__(self):
        return {"_names": self._names}

    def __setstate__(self, state):
        self._names = state["_names"]

    def keys(self):
        """Return the value names.

        Returns
        -------
        out : list
            The keys in the mapping.

        """

        return list(self._names)
