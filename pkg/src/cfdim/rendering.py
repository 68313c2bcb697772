# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
===================
Disk-image pictures
===================

Each digit map phi_b(z) = 1/(b + z) sends the disk D (centre 1/2, radius
1/2) to a smaller disk inside D. Composing along a word gives the nested
disks phi_w(D) that make up the familiar pictures of continued fraction
limit sets. Disks are computed exactly, with Fraction centres and radii:

    >>> d = image_disk(Word([1]))
    >>> d.center, d.radius
    ((Fraction(3, 4), Fraction(0, 1)), Fraction(1, 4))

and only converted to floating point when written out as SVG.
"""

from __future__ import division

import logging
from collections import namedtuple
from fractions import Fraction

from cfdim.convergents import Word
from cfdim.gaussian import GaussianInt


__all__ = ['DiskImage', 'contains', 'disjoint', 'image_disk', 'render_svg',
           'svg_text',
          ]

_logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

# Refuse to draw more disks than this.
MAX_DISKS = 10**4

# Pixel size of the square SVG canvas.
CANVAS = 800


class DiskImage(namedtuple('DiskImage', 'center radius depth word')):
    """The closed disk phi_w(D); ``center`` is a (real, imag) Fraction pair."""

    __slots__ = ()

    def center_complex(self):
        return complex(float(self.center[0]), float(self.center[1]))


def _invert(b, center, radius):
    # Image of the disk |z - c| <= r under z -> 1/(b + z).
    cr = center[0] + b.re
    ci = center[1] + b.im
    den = cr*cr + ci*ci - radius*radius
    if den <= 0:
        raise ArithmeticError('disk contains the pole of 1/(%s + z)' % b)
    return (cr/den, -ci/den), radius/den


def image_disk(w):
    """Return the DiskImage phi_w(D).

    The innermost map phi_{w_n} is applied first.

    >>> image_disk(Word([])).radius
    Fraction(1, 2)
    >>> image_disk(Word([2])).center
    (Fraction(5, 12), Fraction(0, 1))

    """
    w = Word(w)
    center, radius = (HALF, Fraction(0)), HALF
    for b in reversed(w):
        center, radius = _invert(b, center, radius)
    return DiskImage(center, radius, len(w), w)


def _distance_squared(a, b):
    dr = a.center[0] - b.center[0]
    di = a.center[1] - b.center[1]
    return dr*dr + di*di


def contains(outer, inner):
    """Return True if disk ``inner`` lies within disk ``outer``, exactly."""
    gap = outer.radius - inner.radius
    return gap >= 0 and _distance_squared(outer, inner) <= gap*gap


def disjoint(a, b):
    """Return True if the open interiors of two disks do not meet."""
    reach = a.radius + b.radius
    return _distance_squared(a, b) >= reach*reach


def _disks(digits, depth):
    if depth not in (1, 2):
        raise ValueError('depth must be 1 or 2, got %r' % (depth,))
    digits = sorted(set(GaussianInt.coerce(b) for b in digits),
                    key=GaussianInt.sort_key)
    n = len(digits)
    total = n + (n*n if depth == 2 else 0)
    if total > MAX_DISKS:
        raise ValueError('%d disks is too many to draw (limit %d)'
                         % (total, MAX_DISKS))
    disks = [image_disk([b]) for b in digits]
    if depth == 2:
        disks.extend(image_disk([b, c]) for b in digits for c in digits)
    return disks


def _element_id(word):
    # XML names allow neither '+' nor leading digits.
    parts = [str(b).replace('+', 'p').replace('-', 'm') for b in word]
    return 'w_' + '_'.join(parts)


def svg_text(disks):
    """Return an SVG 1.1 document drawing each disk as a circle."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             'width="%d" height="%d" viewBox="0 0 %d %d">'
             % (CANVAS, CANVAS, CANVAS, CANVAS),
             '<circle id="D" cx="%.6f" cy="%.6f" r="%.6f" fill="none" '
             'stroke="black" stroke-width="1"/>'
             % (CANVAS/2, CANVAS/2, CANVAS/2)]
    for disk in disks:
        z = disk.center_complex()
        # SVG y grows downwards; D spans re in [0, 1], im in [-1/2, 1/2].
        lines.append('<circle id="%s" cx="%.6f" cy="%.6f" r="%.6f" '
                     'fill="none" stroke="%s" stroke-width="0.5"/>'
                     % (_element_id(disk.word), CANVAS*z.real,
                        CANVAS*(0.5 - z.imag), CANVAS*float(disk.radius),
                        'blue' if disk.depth == 1 else 'red'))
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'


def render_svg(digits, depth, out):
    """Write the depth-1 (and for depth 2 also depth-2) disks to ``out``.

    ``out`` is a path or a writable text file. Returns the DiskImages
    drawn, depth-1 disks first, each group in digit order.
    """
    disks = _disks(digits, depth)
    text = svg_text(disks)
    if hasattr(out, 'write'):
        out.write(text)
    else:
        with open(out, 'w') as f:
            f.write(text)
    _logger.info('drew %d disks to %s', len(disks), getattr(out, 'name', out))
    return disks
