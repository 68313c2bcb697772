# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
==========
Distortion
==========

On the closed disk D = {z : |z - 1/2| <= 1/2} the derivative of the
composed map phi_w has modulus

    |phi_w'(z)| = 1/|q_w(z)|**2

    >>> derivative_modulus(Word([1, 2]), DiskPoint(0))
    0.1111111111111111

so the ratio |phi_w'(z)|/|phi_w'(z')| is |q_w(z')|**2/|q_w(z)|**2. The
distortion bound brackets it with the convergent of the reversed word:

    |1 + a_rev(w)|**(-2) <= ratio <= |1 + a_rev(w)|**2

    >>> distortion_bounds(Word([1, 2]))
    (Fraction(9, 16), Fraction(16, 9))

For real digits the extremes are reached exactly at the corner pairs
(z, z') = (1, 0) and (0, 1). For complex digits q_w(z) can be smallest or
largest elsewhere on the boundary of D and the ratio can leave the
bracket; ``sharp_distortion`` gives the true extremes in that case and
``verify_distortion`` reports any excursion.
"""

from __future__ import division

import random
from collections import namedtuple
from fractions import Fraction

import mpmath
import numpy as np

from cfdim.convergents import Word, state_of
from cfdim.gaussian import GaussianInt


__all__ = ['DiskPoint', 'DistortionReport', 'chain_rule_modulus',
           'derivative_modulus', 'distortion_bounds', 'sample_disk',
           'sharp_distortion', 'verify_distortion',
          ]

# Share of sample points placed on the boundary circle.
BOUNDARY_SHARE = 0.7

# Working precision, in decimal digits, for extended-precision moduli.
_DPS = 40


class DiskPoint(namedtuple('DiskPoint', 'z')):
    """A point of the closed disk D, stored as a Python complex."""

    __slots__ = ()

    def __new__(cls, z):
        z = complex(z)
        if abs(z - 0.5) > 0.5 + 1e-12:
            raise ValueError('%r is not in the disk |z - 1/2| <= 1/2' % (z,))
        return super(DiskPoint, cls).__new__(cls, z)


def _mpc(x):
    if isinstance(x, GaussianInt):
        return mpmath.mpc(mpmath.mpf(x.re), mpmath.mpf(x.im))
    x = complex(x)
    return mpmath.mpc(x.real, x.imag)


def derivative_modulus(w, z):
    """Return |phi_w'(z)| = 1/|q_w(z)|**2 for z in D.

    The coefficients of q_w are exact; the evaluation at z is carried out
    in extended precision.
    """
    if not isinstance(z, DiskPoint):
        z = DiskPoint(z)
    s = state_of(w)
    with mpmath.workdps(_DPS):
        q = _mpc(s.q_curr) + _mpc(z.z)*_mpc(s.q_prev)
        if q == 0:
            raise ArithmeticError('q_w(z) vanished for w=%s, z=%r' % (w, z))
        return float(1/abs(q)**2)


def chain_rule_modulus(w, z):
    """Return |phi_w'(z)| composed one digit map at a time.

    phi_w is phi_w1 o ... o phi_wn and |phi_b'(x)| = 1/|b + x|**2, so the
    derivative is a product taken from the innermost map outwards. This
    does not use the convergent recurrence at all.
    """
    x = complex(z)
    product = 1.0
    for b in reversed(Word(w)):
        d = complex(b) + x
        product /= abs(d)**2
        x = 1/d
    return product


def distortion_bounds(w):
    """Return (lower, upper) as exact Fractions with lower*upper == 1.

    >>> distortion_bounds(Word([1]))
    (Fraction(1, 4), Fraction(4, 1))

    """
    w = Word(w)
    if not w:
        raise ValueError('distortion bounds need a nonempty word')
    s = state_of(w.dual())
    # |1 + a|**2 = |q + p|**2/|q|**2 for the reversed word.
    one_plus_a = Fraction((s.q_curr + s.p_curr).norm(), s.q_curr.norm())
    return 1/one_plus_a, one_plus_a


def sharp_distortion(w):
    """Return (lower, upper): the exact extremes of the ratio over D x D.

    |q_w(z)| = |q_{n-1}|*|z - P| with P = -q_n/q_{n-1}, so on D its minimum
    and maximum are |q_{n-1}|*(d -+ 1/2), d being the distance from P to
    the centre 1/2. The ratio extremes are the squared quotients of these.
    For real digits they coincide with ``distortion_bounds``.
    """
    w = Word(w)
    if not w:
        raise ValueError('distortion bounds need a nonempty word')
    s = state_of(w)
    with mpmath.workdps(_DPS):
        pole = -_mpc(s.q_curr)/_mpc(s.q_prev)
        d = abs(pole - mpmath.mpf(1)/2)
        quotient = (d + mpmath.mpf(1)/2)/(d - mpmath.mpf(1)/2)
        return float(1/quotient**2), float(quotient**2)


def sample_disk(samples, seed=0):
    """Return ``samples`` points of D: 0 and 1 first, then random points.

    Of the random points about 70% lie on the boundary circle and the rest
    are uniform in the interior. The same seed gives the same points.
    """
    if samples < 2:
        raise ValueError('need at least 2 samples, got %r' % (samples,))
    rng = random.Random(seed)
    points = [0j, 1+0j]
    for _ in range(samples - 2):
        theta = rng.uniform(0, 2*np.pi)
        radius = 0.5
        if rng.random() >= BOUNDARY_SHARE:
            radius *= rng.random()**0.5
        points.append(0.5 + radius*complex(np.cos(theta), np.sin(theta)))
    return points


DistortionReport = namedtuple('DistortionReport',
                              'lower upper min_ratio max_ratio within '
                              'corners_attained extremes_only_at_corners '
                              'sharp_within violations')


def verify_distortion(w, samples, seed=0, rel=1e-12):
    """Compare sampled derivative ratios of phi_w with its bounds.

    For every ordered pair of sample points (z, z') the ratio
    |q_w(z')|**2/|q_w(z)|**2 is formed. The report says whether all
    ratios lie within ``distortion_bounds`` (``within``, with
    ``violations`` counting the pairs outside), whether the corner pairs
    reach the bounds, whether nothing else does, and whether all ratios
    respect ``sharp_distortion``. Nothing is raised.

    >>> r = verify_distortion(Word([1]), 2)
    >>> r.within, r.corners_attained, r.extremes_only_at_corners
    (True, True, True)

    """
    w = Word(w)
    lower, upper = (float(x) for x in distortion_bounds(w))
    sharp_lower, sharp_upper = sharp_distortion(w)
    s = state_of(w)
    # Normalise by q_n so huge coefficients stay in floating range.
    with mpmath.workdps(_DPS):
        shape = complex(_mpc(s.q_prev)/_mpc(s.q_curr))
    z = np.array(sample_disk(samples, seed))
    size = np.abs(1 + z*shape)**2
    ratio = size[np.newaxis, :]/size[:, np.newaxis]
    low_edge = lower*(1 - rel)
    high_edge = upper*(1 + rel)
    outside = (ratio < low_edge) | (ratio > high_edge)
    violations = int(np.count_nonzero(outside))
    corners_attained = bool(abs(ratio[1, 0] - lower) <= rel*lower
                            and abs(ratio[0, 1] - upper) <= rel*upper)
    touching = ((ratio <= lower*(1 + rel)) | (ratio >= upper*(1 - rel)))
    touching[1, 0] = touching[0, 1] = False
    sharp_within = bool(np.all((ratio >= sharp_lower*(1 - 1e-9))
                               & (ratio <= sharp_upper*(1 + 1e-9))))
    return DistortionReport(lower, upper, float(ratio.min()),
                            float(ratio.max()), violations == 0,
                            corners_attained, not touching.any(),
                            sharp_within, violations)
