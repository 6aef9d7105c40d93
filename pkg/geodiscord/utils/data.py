import os
import numpy as np

from .. import data


def list_data():
    """
    lists all bundled data files
    """
    path = data.__path__[0]

    return sorted(f for f in os.listdir(path) if not f.startswith("__"))


def get_filepath(filename):
    """
    get path of a bundled data file
    """
    filepath = os.path.join(data.__path__[0], filename)

    return filepath


def get_data(filename, **kwargs):
    """
    load a bundled whitespace separated table
    """
    return np.genfromtxt(get_filepath(filename), **kwargs)
