# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""Assorted private helpers for the cfdim package.

This module is considered a private implementation detail and is subject
to change without notice.
"""

from __future__ import division

import math
import os
from collections import namedtuple
from timeit import default_timer


LN2 = math.log(2)

# Keep this many leading bits of a huge integer before handing it to
# math.log. More than the 53 bits of a double, so the truncation never
# dominates the rounding error of the conversion.
_LEADING_BITS = 64


def log_int(n):
    """Return the natural log of the positive integer n.

    >>> log_int(1)
    0.0
    >>> round(log_int(2**200) / LN2, 9)
    200.0

    Only the bit length and the leading bits of n are used, so values far
    beyond the range of a float are fine.
    """
    if n <= 0:
        raise ValueError('log_int requires a positive integer, got %r' % n)
    shift = n.bit_length() - _LEADING_BITS
    if shift > 0:
        return math.log(n >> shift) + shift*LN2
    return math.log(n)


# === Configuration ===

# Stored-mode enumeration keeps two doubles per word. 2**24 words is
# about 256 MB of weights.
DEFAULT_MEM_CAP = 2**24


def memory_cap():
    """Return the stored-weights cap, honouring ``CFDIM_MEM_CAP``."""
    value = os.environ.get('CFDIM_MEM_CAP')
    if value is None or value.strip() == '':
        return DEFAULT_MEM_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ValueError('CFDIM_MEM_CAP must be an integer, got %r' % value)
    if cap < 1:
        raise ValueError('CFDIM_MEM_CAP must be positive, got %d' % cap)
    return cap


def default_threads():
    """Return the machine parallelism, at least 1."""
    return os.cpu_count() or 1


# === Timing ===

class Stopwatch(object):
    """Accumulating wall-clock timer.

    >>> timer = Stopwatch()
    >>> timer.start(); timer.stop()
    >>> timer.elapsed >= 0
    True

    """
    def __init__(self, timer=None):
        if timer is None:
            timer = default_timer
        self.timer = timer
        self.reset()

    def reset(self):
        """Reset all the collected timer results."""
        self._start = None
        self._elapsed = 0.0

    def start(self):
        """Start the timer."""
        self._start = self.timer()

    def stop(self):
        """Stop the timer, adding the interval to the elapsed total."""
        if self._start is None:
            raise RuntimeError('timer was never started')
        self._elapsed += self.timer() - self._start
        self._start = None

    @property
    def elapsed(self):
        return self._elapsed

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *exc_info):
        self.stop()
        return False


# === Instrumentation used by the solver ===

Bracket = namedtuple('Bracket', 'lo hi lo_value hi_value')


class SolverStats(object):
    """Statistics for one root solve.

    Instances record:

        evaluations:
            The number of pressure evaluations made.

        doublings:
            How often the upper end of the bracket was doubled before
            the pressure became negative.

        bisections:
            The number of bisection steps taken.

        bracket:
            The final ``Bracket(lo, hi, lo_value, hi_value)``, where
            ``lo_value >= 0 > hi_value`` certifies the root, or None.

    """
    def __init__(self):
        self.evaluations = 0
        self.doublings = 0
        self.bisections = 0
        self.bracket = None

    def __repr__(self):
        template = "%s(evaluations=%d, doublings=%d, bisections=%d, bracket=%r)"
        name = type(self).__name__
        return template % (name, self.evaluations, self.doublings,
                           self.bisections, self.bracket)

    def update(self, what):
        assert what in ('evaluation', 'doubling', 'bisection')
        if what == 'evaluation':
            self.evaluations += 1
        elif what == 'doubling':
            self.doublings += 1
        else:
            self.bisections += 1
