# -*- coding: utf-8 -*-

##  Package cfdim
##
##  Copyright © 2026 the cfdim authors.
##
##  Permission is hereby granted, free of charge, to any person obtaining
##  a copy of this software and associated documentation files (the
##  "Software"), to deal in the Software without restriction, including
##  without limitation the rights to use, copy, modify, merge, publish,
##  distribute, sublicense, and/or sell copies of the Software, and to
##  permit persons to whom the Software is furnished to do so, subject to
##  the following conditions:
##
##  The above copyright notice and this permission notice shall be
##  included in all copies or substantial portions of the Software.
##
##  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
##  EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
##  MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
##  IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
##  CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
##  TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
##  SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""\
=============
Package cfdim
=============

This package computes upper and lower bounds on the Hausdorff dimension
of sets of continued fractions whose digits are restricted to an
alphabet, real or complex.


Definitions
-----------

A digit is a Gaussian integer b = m + ni with m >= 1. For an alphabet I
of digits, J_I is the set of numbers

    1/(b1 + 1/(b2 + 1/(b3 + ...)))      with every bi in I.

Real alphabets such as {1, 2} give subsets of the interval [0, 1];
complex alphabets give subsets of the disk |z - 1/2| <= 1/2 in the
complex plane.

For each word length k there are two numbers T_k^- <= T_k^+ with

    T_k^- <= dim J_I <= T_k^+

and both converge to the dimension at the rate O(1/k) as k grows. They are
found by enumerating all (#I)**k words of length k, so the cost grows
exponentially in k.


Computing bounds
----------------

``bounds`` takes the alphabet as text:

    >>> b = bounds('{2,3}', 6)
    >>> b.t_minus < 0.3397 < b.t_plus
    True

An infinite alphabet has to be cut off at a ceiling first:

    >>> import warnings
    >>> with warnings.catch_warnings():
    ...     warnings.simplefilter('ignore', TruncationWarning)
    ...     digits = materialize('F3', ceiling=10)
    >>> len(digits)
    8

``sweep`` runs ``bounds`` for k = 1, 2, ... and checks their convergence.


Sub-modules
-----------

The ``cfdim`` package includes the following public sub-modules:

    alphabet:
        Parse and materialize digit alphabets.

    cli:
        The ``cfdim`` command line.

    convergents:
        Words and the exact convergent recurrence.

    distortion:
        Derivatives of the digit maps and their distortion bounds.

    enumeration:
        Enumerate the word tree into pressure weights.

    gaussian:
        Exact Gaussian-integer arithmetic.

    pressure:
        The truncated pressure functions and the sandwich check.

    rendering:
        Exact disk images and their SVG pictures.

    solver:
        Root finding for T_k^- and T_k^+, sweeps over k.

    tables:
        Recompute reference tables of bounds.

    verify:
        Seeded verification suites.

plus the following private sub-modules:

    utilities:
        Shared helpers: logarithms of big integers, configuration, and
        timing.

    tests:
        Unit and regression tests for the package.

The contents of the private sub-modules are subject to change or removal
without notice.

"""

from __future__ import division


# Module metadata.
__version__ = "0.1.0"
__date__ = "2026-10-18"
__author__ = "the cfdim authors"
__author_email__ = "cfdim@users.noreply.github.com"


from cfdim.alphabet import TruncationWarning
import cfdim.alphabet
import cfdim.solver


__all__ = ['TruncationWarning', 'bounds', 'materialize', 'sweep']


def materialize(alphabet, ceiling=None, ceiling_mode='value'):
    """Return the sorted digits of alphabet text.

    >>> [str(b) for b in materialize('{1..3}')]
    ['1', '2', '3']

    """
    spec = cfdim.alphabet.parse_alphabet(alphabet, ceiling)
    return cfdim.alphabet.materialize(spec, ceiling, ceiling_mode)


def bounds(alphabet, k, ceiling=None, ceiling_mode='value', **kwargs):
    """Return the DimensionBounds of alphabet text at word length k.

    Further keyword arguments (``tol``, ``mode``, ``threads``,
    ``clamp_one``) are passed to ``solver.dimension_bounds``.

    >>> b = bounds('{2}', 3)
    >>> b.t_minus, b.t_plus
    (0.0, 0.0)

    """
    spec = cfdim.alphabet.parse_alphabet(alphabet, ceiling)
    digits = cfdim.alphabet.materialize(spec, ceiling, ceiling_mode)
    return cfdim.solver.dimension_bounds(digits, k, spec=spec,
                                         ceiling=ceiling,
                                         ceiling_mode=ceiling_mode, **kwargs)


def sweep(alphabet, k_max, ceiling=None, ceiling_mode='value', **kwargs):
    """Return the SweepResult of alphabet text for k = 1..k_max."""
    spec = cfdim.alphabet.parse_alphabet(alphabet, ceiling)
    digits = cfdim.alphabet.materialize(spec, ceiling, ceiling_mode)
    return cfdim.solver.sweep(digits, k_max, spec=spec, ceiling=ceiling,
                              ceiling_mode=ceiling_mode, **kwargs)
