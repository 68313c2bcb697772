# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
==================
Truncated pressure
==================

For a word length k the two truncated pressure functions are

    P_k^-(t) = (1/k) ln sum_w |q_w|**(-2t) * |1 + a_w|**(-2t)
    P_k^+(t) = (1/k) ln sum_w |q_w|**(-2t) * |1 + a_w|**(+2t)

summed over every word w of length k. Their zeros T_k^- <= T_k^+ bracket
the Hausdorff dimension of the limit set. The exponent on |q_w| is -2t,
since |phi_w'(0)|**t = |q_w|**(-2t); every result carries the tag
``EXPONENT_CONVENTION`` so that this is never lost.

    >>> from cfdim.enumeration import enumerate_weights
    >>> curve = pressure_curve(enumerate_weights([1, 2], 2), '-')
    >>> round(eval_pressure(curve, 0.5), 5)
    -0.03834

A curve only has a unique zero if each summand decays in t. Where some
summand does not, ``validity`` says so and counts the offenders:

    >>> validity(pressure_curve(enumerate_weights([1, 2], 1), '+'))
    ValidityFlag(monotone=False, offending_word_count=1)

Sums are formed as log-sum-exp: the largest exponent is factored out of
each chunk and the scaled terms are added with ``math.fsum``, which is
exactly rounded and so independent of the order of the terms.
"""

from __future__ import division

import math
from collections import namedtuple

import numpy as np

from cfdim.convergents import state_of
from cfdim.enumeration import enumerate_weights, iter_states, weight_term


__all__ = ['EXPONENT_CONVENTION', 'PressureCurve', 'SandwichReport',
           'ValidityFlag', 'direct_sum', 'eval_pressure', 'log_sum',
           'pressure_curve', 'sandwich_check', 'validity',
          ]

EXPONENT_CONVENTION = 'q^-2t'

SIGNS = ('-', '+')

# Direct enumeration in the sandwich check is refused beyond this.
SANDWICH_LIMIT = 10**6


PressureCurve = namedtuple('PressureCurve', 'weights k sign')

ValidityFlag = namedtuple('ValidityFlag', 'monotone offending_word_count')


def pressure_curve(weights, sign):
    """Return the PressureCurve of sign '-' or '+' over a weight set."""
    if sign not in SIGNS:
        raise ValueError("sign must be '-' or '+', got %r" % (sign,))
    return PressureCurve(weights, weights.k, sign)


# === Chunk reducers ===
#
# These run on one chunk of weights at a time, possibly inside a worker
# process, so they live at module level and return plain Python values.

def _bases(log_q, log_1pa, sign):
    # ln of the per-word base; the summand is exp(-2t*base).
    if sign == '-':
        return log_q + log_1pa
    if sign == '+':
        return log_q - log_1pa
    return log_q


def _chunk_lse(log_q, log_1pa, sign, t):
    x = (-2.0*t)*_bases(log_q, log_1pa, sign)
    m = float(x.max())
    return m, math.fsum(np.exp(x - m).tolist())


def _chunk_offenders(log_q, log_1pa, sign):
    return int(np.count_nonzero(_bases(log_q, log_1pa, sign) <= 0.0))


def _combine(parts):
    parts = [(m, s) for m, s in parts if s > 0]
    top = max(m for m, s in parts)
    total = math.fsum(s*math.exp(m - top) for m, s in parts)
    return top + math.log(total)


def _check_t(t):
    if not t >= 0:
        raise ValueError('pressure needs t >= 0, got %r' % (t,))


def log_sum(curve, t):
    """Return ln of the un-normalised sum behind ``curve`` at t."""
    _check_t(t)
    return _combine(curve.weights.map_chunks(_chunk_lse, curve.sign, t))


def eval_pressure(curve, t):
    """Return P_k(t) = log_sum(curve, t)/k.

    >>> from cfdim.enumeration import enumerate_weights
    >>> w = enumerate_weights([2], 1)
    >>> p = eval_pressure(pressure_curve(w, '-'), 1.0)
    >>> abs(p + 2*math.log(3)) < 1e-12
    True

    """
    return log_sum(curve, t)/curve.k


def validity(curve):
    """Report whether every summand of curve decays in t.

    A word whose base ln|q_w| -+ ln|1 + a_w| is not positive contributes
    a term that is at least 1 for all t, so the curve has no zero.
    """
    offenders = sum(curve.weights.map_chunks(_chunk_offenders, curve.sign))
    return ValidityFlag(offenders == 0, offenders)


# === Oracles ===

def direct_sum(digits, k, t, sign=None, dual=False):
    """Return ln of a pressure sum built word by word from exact states.

    ``sign`` is '-', '+' or None (the plain sum of |q_w|**(-2t)). With
    ``dual=True`` the factor |1 + a| is taken from the reversed word, as
    in the form the bounds are first derived in. This is slow and meant
    for checking the fast path on small trees.
    """
    _check_t(t)
    parts = []
    for word, state in iter_states(digits, k):
        term = weight_term(state)
        log_1pa = term.log_1pa
        if dual and sign is not None:
            log_1pa = weight_term(state_of(word.dual())).log_1pa
        if sign == '-':
            base = term.log_q + log_1pa
        elif sign == '+':
            base = term.log_q - log_1pa
        else:
            base = term.log_q
        parts.append(-2.0*t*base)
    top = max(parts)
    return top + math.log(math.fsum(math.exp(x - top) for x in parts))


SandwichReport = namedtuple('SandwichReport',
                            'lower middle upper holds strict')


def sandwich_check(digits, k, n, t):
    """Check the power sandwich on words of length k*n.

    In log space, with S_k^-+ the sums over words of length k:

        n*ln S_k^-(t) <= ln sum_{|w|=kn} |q_w|**(-2t) <= n*ln S_k^+(t)

    The middle sum is enumerated directly. Violations are reported, not
    raised.

    >>> r = sandwich_check([1, 2], 1, 2, 0.5)
    >>> r.holds, r.strict
    (True, True)

    """
    if n < 1:
        raise ValueError('sandwich power n must be positive, got %r' % n)
    if len(digits)**(k*n) > SANDWICH_LIMIT:
        raise ValueError('(#I)**(k*n) = %d**%d words is too many to enumerate '
                         'directly' % (len(digits), k*n))
    base = enumerate_weights(digits, k, mode='stored')
    lower = n*log_sum(pressure_curve(base, '-'), t)
    upper = n*log_sum(pressure_curve(base, '+'), t)
    long_words = enumerate_weights(digits, k*n, mode='stored')
    middle = _combine(long_words.map_chunks(_chunk_lse, None, t))
    # Allow for rounding when n = 1 makes the bounds touch.
    slack = 1e-12*max(1.0, abs(middle))
    holds = lower <= middle + slack and middle <= upper + slack
    strict = lower < middle < upper
    return SandwichReport(lower, middle, upper, holds, strict)
