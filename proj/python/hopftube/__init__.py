"""Python interface to the hopftube core library.

The compiled extension ``_hopftube`` carries the full API; this package
re-exports it and adds small path helpers for the bundled data files.
"""

import os

from _hopftube import *  # noqa: F401,F403
from _hopftube import version  # noqa: F401


def data_dir():
    """Directory with the bundled polynomial and scenario files.

    Honors the HOPFTUBE_DATA environment variable; falls back to the
    repository-relative ``data`` directory.
    """
    env = os.environ.get("HOPFTUBE_DATA")
    if env:
        return env
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.normpath(os.path.join(here, "..", "..", "data"))


def data_path(*parts):
    """Join path components onto :func:`data_dir`."""
    return os.path.join(data_dir(), *parts)
