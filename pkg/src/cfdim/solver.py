# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
=================
Dimension bounds
=================

The bounds T_k^- and T_k^+ are the zeros of the truncated pressure curves
of word length k. ``dimension_bounds`` enumerates the words once and
solves both curves by bisection:

    >>> b = dimension_bounds([1, 2], 1)
    >>> round(b.t_minus, 3)
    0.394
    >>> b.t_plus is None
    True
    >>> print(b.plus_reason)
    no root: 1 word(s) have a summand that does not decay in t; increase k

Bisection is used rather than Newton's method. Each step halves a bracket
whose ends have certified opposite signs, so a returned root always
comes with ``Bracket(lo, hi, lo_value, hi_value)`` where
lo_value >= 0 > hi_value.

A single-digit alphabet has a one-point limit set:

    >>> dimension_bounds([2], 3)[1:3]
    (0.0, 0.0)

``sweep`` repeats the computation for k = 1, 2, ..., k_max, checks that
T_k^- increases and T_k^+ decreases, and fits the widths to C/k.
"""

from __future__ import division

import logging
import math
from collections import namedtuple

import mpmath

from cfdim.alphabet import ceiling_tail, is_real
from cfdim.enumeration import enumerate_weights
from cfdim.gaussian import GaussianInt, gi_log_modulus
from cfdim.pressure import eval_pressure, pressure_curve, validity
from cfdim.utilities import Bracket, SolverStats, Stopwatch


__all__ = ['DEFAULT_TOL_STORED', 'DEFAULT_TOL_STREAMED', 'DimensionBounds',
           'MAX_BRACKET', 'MoranCheck', 'RootResult', 'SweepResult',
           'dimension_bounds', 'mu_subsystem_check', 'solve_root', 'sweep',
           'tail_estimate',
          ]

_logger = logging.getLogger(__name__)

DEFAULT_TOL_STORED = 1e-10
DEFAULT_TOL_STREAMED = 1e-6

# The upper end of the bracket is doubled from 1 up to this value.
MAX_BRACKET = 1024


RootResult = namedtuple('RootResult', 't bracket reason stats')


def solve_root(curve, tol, max_bracket=MAX_BRACKET):
    """Find the zero of a pressure curve to within tol.

    Returns a RootResult. When there is no root, ``t`` and ``bracket``
    are None and ``reason`` explains why.
    """
    if not tol > 0:
        raise ValueError('tolerance must be positive, got %r' % (tol,))
    stats = SolverStats()
    flag = validity(curve)
    if not flag.monotone:
        reason = ('no root: %d word(s) have a summand that does not decay '
                  'in t; increase k' % flag.offending_word_count)
        return RootResult(None, None, reason, stats)

    def f(t):
        stats.update('evaluation')
        return eval_pressure(curve, t)

    lo, flo = 0.0, f(0.0)
    if flo <= 0:
        # Only a single word can give a sum of 1 at t = 0.
        stats.bracket = Bracket(0.0, 0.0, flo, flo)
        return RootResult(0.0, stats.bracket, None, stats)
    hi = 1.0
    fhi = f(hi)
    while fhi >= 0:
        lo, flo = hi, fhi
        hi *= 2
        stats.update('doubling')
        if hi > max_bracket:
            reason = ('no root: the sum stays at or above 1 up to t = %g'
                      % max_bracket)
            return RootResult(None, None, reason, stats)
        fhi = f(hi)
    while hi - lo > tol:
        mid = (lo + hi)/2
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        stats.update('bisection')
        if fmid >= 0:
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    stats.bracket = Bracket(lo, hi, flo, fhi)
    _logger.debug('sign %s root in [%r, %r] after %r', curve.sign, lo, hi,
                  stats)
    return RootResult((lo + hi)/2, stats.bracket, None, stats)


DimensionBounds = namedtuple('DimensionBounds',
                             'k t_minus t_plus minus_reason plus_reason '
                             'tolerance iterations term_count wall_time '
                             'mode brackets tail moran')


def dimension_bounds(digits, k, tol=None, mode='auto', threads=1,
                     clamp_one=False, spec=None, ceiling=None,
                     ceiling_mode='value', mem_cap=None):
    """Return the DimensionBounds of a materialized alphabet at length k.

    ``tol`` defaults to DEFAULT_TOL_STORED or DEFAULT_TOL_STREAMED
    according to the enumeration mode used.

    With ``clamp_one`` an upper bound that is absent or exceeds the
    ambient dimension (1 for real digits, 2 otherwise) is replaced by it.

    If ``spec`` describes an infinite alphabet, the weight of the digits
    cut off by its ceiling is estimated at T_k^+ and returned as ``tail``.

    ``moran`` is ``mu_subsystem_check`` evaluated at T_k^+, or None when
    there is no upper bound.
    """
    digits = [GaussianInt.coerce(b) for b in digits]
    timer = Stopwatch()
    with timer:
        weights = enumerate_weights(digits, k, mode, threads,
                                    mem_cap=mem_cap)
        with weights:
            if tol is None:
                tol = (DEFAULT_TOL_STORED if weights.mode == 'stored'
                       else DEFAULT_TOL_STREAMED)
            minus = solve_root(pressure_curve(weights, '-'), tol)
            plus = solve_root(pressure_curve(weights, '+'), tol)
    t_plus, plus_reason = plus.t, plus.reason
    if clamp_one:
        ambient = 1 if is_real(digits) else 2
        if t_plus is None or t_plus > ambient:
            plus_reason = 'clamped to the ambient dimension %d' % ambient
            t_plus = float(ambient)
    tail = None
    if spec is not None and ceiling_tail(spec, ceiling, ceiling_mode):
        t = t_plus if t_plus is not None else minus.t
        if t is not None:
            tail = tail_estimate(spec, t, ceiling, ceiling_mode)
    moran = None
    if t_plus is not None:
        moran = mu_subsystem_check(digits, t_plus)
        _logger.debug('k=%d: digit sum at T+ is %r', k, moran.total)
    iterations = minus.stats.evaluations + plus.stats.evaluations
    _logger.info('k=%d: T- = %r, T+ = %r (%d evaluations, %.3fs)', k,
                 minus.t, t_plus, iterations, timer.elapsed)
    return DimensionBounds(k, minus.t, t_plus, minus.reason, plus_reason,
                           tol, iterations, weights.count, timer.elapsed,
                           weights.mode, (minus.bracket, plus.bracket), tail,
                           moran)


SweepResult = namedtuple('SweepResult',
                         'bounds minus_increasing plus_decreasing violations '
                         'widths rate_constant rate_residual caveats')


def sweep(digits, k_max, tol=None, **kwargs):
    """Compute bounds for k = 1..k_max and check their behaviour in k.

    Monotonicity violations beyond twice the solver tolerance are listed
    in ``violations`` as ``(sign, k)``, meaning the bound at k+1 moved
    the wrong way from the bound at k. The widths T_k^+ - T_k^- are
    fitted by least squares to C/k; C and the root mean square residual
    are returned.
    """
    if k_max < 2:
        raise ValueError('sweep needs k_max >= 2, got %r' % (k_max,))
    digits = [GaussianInt.coerce(b) for b in digits]
    bounds = [dimension_bounds(digits, k, tol, **kwargs)
              for k in range(1, k_max+1)]
    violations = []
    for before, after in zip(bounds, bounds[1:]):
        slack = 2*max(before.tolerance, after.tolerance)
        if (before.t_minus is not None and after.t_minus is not None
                and after.t_minus < before.t_minus - slack):
            violations.append(('-', before.k))
        if (before.t_plus is not None and after.t_plus is not None
                and after.t_plus > before.t_plus + slack):
            violations.append(('+', before.k))
    widths = [b.t_plus - b.t_minus
              if b.t_plus is not None and b.t_minus is not None else None
              for b in bounds]
    pairs = [(b.k, w) for b, w in zip(bounds, widths) if w is not None]
    if pairs:
        c = (math.fsum(w/k for k, w in pairs)
             / math.fsum(1/(k*k) for k, w in pairs))
        residual = math.sqrt(math.fsum((w - c/k)**2 for k, w in pairs)
                             / len(pairs))
    else:
        c = residual = None
    caveats = []
    failed = [b for b in bounds if b.moran is not None and not b.moran.holds]
    if failed and GaussianInt(1) in digits:
        b = failed[0]
        caveats.append('the alphabet contains 1, so the digit sum at T_%d^+ '
                       '= %.6g is %.6g >= 1 and T_k^+ need not decrease'
                       % (b.k, b.t_plus, b.moran.total))
    return SweepResult(bounds,
                       not any(s == '-' for s, k in violations),
                       not any(s == '+' for s, k in violations),
                       violations, widths, c, residual, caveats)


MoranCheck = namedtuple('MoranCheck', 'total holds')


def mu_subsystem_check(digits, t):
    """Evaluate sum_b |b|**(-2t) over the digits and compare it with 1.

    >>> check = mu_subsystem_check([2], 1)
    >>> round(check.total, 12), check.holds
    (0.25, True)
    >>> mu_subsystem_check([1, 2], 0.562868).holds
    False

    """
    total = math.fsum(math.exp(-2*t*gi_log_modulus(b)) for b in digits)
    return MoranCheck(total, total <= 1)


def tail_estimate(spec, t, ceiling=None, ceiling_mode='value'):
    """Return sum |b|**(-2t) over the digits a ceiling cuts from spec.

    The omitted digits form an arithmetic progression first, first+step,
    ..., so the sum is step**(-2t) * zeta(2t, first/step), a Hurwitz zeta
    value. It diverges when 2t <= 1. Finite alphabets lose nothing.

    >>> from cfdim.alphabet import parse_alphabet
    >>> round(tail_estimate(parse_alphabet('N'), 1.0, ceiling=1), 6)
    0.644934
    >>> tail_estimate(parse_alphabet('2N'), 0.4, ceiling=100)
    inf

    """
    tail = ceiling_tail(spec, ceiling, ceiling_mode)
    if tail is None:
        return 0.0
    s = 2*t
    if s <= 1:
        return float('inf')
    step, first = tail
    return float(mpmath.power(step, -s)*mpmath.zeta(s, mpmath.mpf(first)/step))
