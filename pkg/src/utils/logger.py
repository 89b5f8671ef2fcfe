"""
Logging facilities

This file should have an absolute minimum in imports. If you'd like to layer
additional functionality on top of some of the methods below, wrap them in
a higher layer module.
"""

import sys

from twisted.python import log


def _lines(msg):
    try:
        return str(msg).splitlines()
    except Exception as e:
        return [repr(e)]


def start_logging(stream=None):
    """
    Attaches a log observer. Nothing is printed until this is called, so
    the CLI only does so when asked to be verbose.

    :param stream: File-like object to write to. Defaults to stderr.
    """

    log.startLogging(stream or sys.stderr, setStdout=False)


def error(errmsg):
    """
    :param str errmsg: Logged with the ``[EE]`` prefix.
    """

    for line in _lines(errmsg):
        log.msg('[EE] %s' % line)


def warning(warnmsg):
    """
    Skipped samples, unconverged maxima, parameters near the ends of their
    ranges.
    """

    for line in _lines(warnmsg):
        log.msg('[WW] %s' % line)


def info(infomsg):
    """
    Progress: grids built, radii evaluated.
    """

    for line in _lines(infomsg):
        log.msg('[..] %s' % line)
