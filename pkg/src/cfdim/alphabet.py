# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
================
Digit alphabets
================

An alphabet is a set of digits b with positive real part, drawn from the
Gaussian integers N x Zi. Alphabets are parsed from a small grammar:

    ==================  ===============================================
    Text                Meaning
    ==================  ===============================================
    {1,2}               explicit list; items may be Gaussian (1+i) or
                        ranges (1..3)
    {2..5}              integer range, inclusive
    2N                  the progression 2, 4, 6, ... (N alone is 1N)
    F3                  the cofinite set N minus {1, 2}
    {2..5}x{-8..8}i     complex rectangle, real set times imaginary set
    ==================  ===============================================

plus alphabets read from a file, one digit per line. Parsing does not
materialize anything:

    >>> spec = parse_alphabet('{2..5}x{-8..8}i')
    >>> spec.kind, cardinality(spec)
    ('rectangle', 68)

Infinite kinds need a ceiling before they can be materialized:

    >>> [str(b) for b in materialize(parse_alphabet('2N'), ceiling=10)]
    ['2', '4', '6', '8', '10']
    >>> [str(b) for b in materialize(parse_alphabet('F3'), ceiling=6)]
    ['3', '4', '5', '6']

By default the ceiling bounds the digit value. With ``ceiling_mode='index'``
it bounds the number of digits instead, so ``2N`` with ceiling 3 is
{2, 4, 6}:

    >>> [str(b) for b in materialize(parse_alphabet('2N'), ceiling=3,
    ...                              ceiling_mode='index')]
    ['2', '4', '6']

Materialized digits are duplicate-free and sorted by (real, imaginary).
"""

from __future__ import division

import re
import warnings
from collections import namedtuple

from cfdim.gaussian import GaussianInt, parse_gaussian


__all__ = ['AlphabetError', 'AlphabetSpec', 'TruncationWarning',
           'alphabet_text', 'cardinality', 'ceiling_tail', 'is_finite',
           'is_real', 'load_alphabet', 'materialize', 'parse_alphabet',
          ]


class AlphabetError(ValueError):
    """Raised for malformed, invalid or empty alphabets."""
    pass


class TruncationWarning(RuntimeWarning):
    """Warning raised when an infinite alphabet is cut at a ceiling."""
    pass


# params per kind:
#   explicit    tuple of GaussianInt
#   range       (low, high)
#   progression (step,)
#   cofinite    (n,)
#   rectangle   (tuple of real parts, tuple of imaginary parts)
#   file        (path, tuple of GaussianInt)
AlphabetSpec = namedtuple('AlphabetSpec', 'kind params ceiling text')

_FINITE_KINDS = ('explicit', 'range', 'rectangle', 'file')
_INFINITE_KINDS = ('progression', 'cofinite')

CEILING_MODES = ('value', 'index')


# === Parsing ===

_RANGE = re.compile(r'^\s*([+-]?\d+)\s*\.\.\s*([+-]?\d+)\s*$')
_PROGRESSION = re.compile(r'^\s*(\d*)\s*N\s*$')
_COFINITE = re.compile(r'^\s*F\s*(\d+)\s*$')
_RECTANGLE = re.compile(r'^\s*(\{[^}]*\})\s*[xX*]\s*(\{[^}]*\})\s*i\s*$')


def _braced_items(text):
    text = text.strip()
    if not (text.startswith('{') and text.endswith('}')):
        raise AlphabetError('expected a {...} set, got %r' % text)
    body = text[1:-1].strip()
    if not body:
        raise AlphabetError('empty set %r' % text)
    return [item.strip() for item in body.split(',')]


def _integer_set(text):
    """Parse a braced set of plain integers, allowing a..b ranges."""
    values = []
    for item in _braced_items(text):
        match = _RANGE.match(item)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise AlphabetError('empty range %r' % item)
            values.extend(range(low, high+1))
            continue
        try:
            values.append(int(item))
        except ValueError:
            raise AlphabetError('expected an integer, got %r' % item)
    return tuple(sorted(set(values)))


def _check_digits(digits, text):
    for b in digits:
        if b.re < 1:
            raise AlphabetError('digit %s in %r has nonpositive real part'
                                % (b, text))


def parse_alphabet(text, ceiling=None):
    """Parse alphabet text into an ``AlphabetSpec``.

    >>> parse_alphabet('{1,2}').params
    (GaussianInt(1, 0), GaussianInt(2, 0))
    >>> parse_alphabet('{0,1}')
    Traceback (most recent call last):
      ...
    cfdim.alphabet.AlphabetError: digit 0 in '{0,1}' has nonpositive real part

    """
    if ceiling is not None:
        ceiling = _check_ceiling(ceiling)
    if not isinstance(text, str):
        raise TypeError('alphabet text must be a string, got %r' % (text,))
    source = text.strip()
    if not source:
        raise AlphabetError('empty alphabet text')
    match = _PROGRESSION.match(source)
    if match:
        step = int(match.group(1) or '1')
        if step < 1:
            raise AlphabetError('progression step must be positive in %r'
                                % text)
        return AlphabetSpec('progression', (step,), ceiling, source)
    match = _COFINITE.match(source)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise AlphabetError('cofinite alphabet F%d is not valid' % n)
        return AlphabetSpec('cofinite', (n,), ceiling, source)
    match = _RECTANGLE.match(source)
    if match:
        reals = _integer_set(match.group(1))
        imags = _integer_set(match.group(2))
        if reals[0] < 1:
            raise AlphabetError('digit real part %d in %r is nonpositive'
                                % (reals[0], text))
        return AlphabetSpec('rectangle', (reals, imags), ceiling, source)
    items = _braced_items(source)
    if len(items) == 1:
        match = _RANGE.match(items[0])
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise AlphabetError('empty range %r' % text)
            if low < 1:
                raise AlphabetError('digit %d in %r has nonpositive real part'
                                    % (low, text))
            return AlphabetSpec('range', (low, high), ceiling, source)
    digits = set()
    for item in items:
        match = _RANGE.match(item)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            digits.update(GaussianInt(b) for b in range(low, high+1))
            continue
        try:
            digits.add(parse_gaussian(item))
        except ValueError:
            raise AlphabetError('cannot parse digit %r in %r' % (item, text))
    digits = tuple(sorted(digits, key=GaussianInt.sort_key))
    if not digits:
        raise AlphabetError('empty alphabet %r' % text)
    _check_digits(digits, source)
    return AlphabetSpec('explicit', digits, ceiling, source)


def load_alphabet(path, ceiling=None):
    """Read an alphabet file: one digit per line, ``#`` starts a comment.

    This is how alphabets with number theoretic restrictions (say, the
    powers of 2 between 16 and 2**20) are supplied.
    """
    digits = set()
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            try:
                digits.add(parse_gaussian(line))
            except ValueError:
                raise AlphabetError('%s:%d: cannot parse digit %r'
                                    % (path, lineno, line))
    if not digits:
        raise AlphabetError('alphabet file %s holds no digits' % path)
    digits = tuple(sorted(digits, key=GaussianInt.sort_key))
    _check_digits(digits, path)
    if ceiling is not None:
        ceiling = _check_ceiling(ceiling)
    return AlphabetSpec('file', (path, digits), ceiling, '@%s' % path)


def _check_ceiling(ceiling):
    if isinstance(ceiling, float) and ceiling == int(ceiling):
        ceiling = int(ceiling)
    if not isinstance(ceiling, int) or ceiling < 1:
        raise AlphabetError('ceiling must be a positive integer, got %r'
                            % (ceiling,))
    return ceiling


# === Queries ===

def is_finite(spec):
    return spec.kind in _FINITE_KINDS


def cardinality(spec, ceiling=None, ceiling_mode='value'):
    """Return the number of digits ``materialize`` would produce.

    >>> cardinality(parse_alphabet('2N'), ceiling=10**6)
    500000
    >>> cardinality(parse_alphabet('2N'), ceiling=10**6, ceiling_mode='index')
    1000000

    """
    if spec.kind == 'range' and _effective_ceiling(spec, ceiling) is None:
        low, high = spec.params
        return high - low + 1
    if spec.kind == 'rectangle' and _effective_ceiling(spec, ceiling) is None:
        reals, imags = spec.params
        return len(reals)*len(imags)
    if spec.kind in _INFINITE_KINDS:
        limit = _effective_ceiling(spec, ceiling)
        if limit is None:
            raise AlphabetError('alphabet %r is infinite; give a ceiling'
                                % spec.text)
        _check_mode(ceiling_mode)
        if ceiling_mode == 'index':
            return limit
        if spec.kind == 'progression':
            return limit // spec.params[0]
        return max(0, limit - spec.params[0] + 1)
    return len(materialize(spec, ceiling, ceiling_mode))


def is_real(digits):
    """Return True if every digit is a real integer."""
    return all(GaussianInt.coerce(b).is_real() for b in digits)


def alphabet_text(spec):
    """Return canonical text for spec, suitable for parse_alphabet.

    >>> alphabet_text(parse_alphabet('{ 2 .. 5 } x {-1..1} i'))
    '{2..5}x{-1..1}i'

    """
    kind, params = spec.kind, spec.params
    if kind == 'progression':
        return '%dN' % params[0]
    if kind == 'cofinite':
        return 'F%d' % params[0]
    if kind == 'range':
        return '{%d..%d}' % params
    if kind == 'rectangle':
        return '%sx%si' % (_set_text(params[0]), _set_text(params[1]))
    if kind == 'file':
        return '@%s' % params[0]
    return '{%s}' % ','.join(str(b) for b in params)


def _set_text(values):
    values = list(values)
    if values == list(range(values[0], values[-1]+1)) and len(values) > 2:
        return '{%d..%d}' % (values[0], values[-1])
    return '{%s}' % ','.join('%d' % v for v in values)


# === Materialization ===

def _effective_ceiling(spec, ceiling):
    if ceiling is not None:
        return _check_ceiling(ceiling)
    return spec.ceiling


def _check_mode(mode):
    if mode not in CEILING_MODES:
        raise ValueError('ceiling_mode must be one of %r, got %r'
                         % (CEILING_MODES, mode))


def materialize(spec, ceiling=None, ceiling_mode='value'):
    """Return the sorted list of GaussianInt digits of spec.

    ``ceiling`` overrides the ceiling recorded in the spec. For finite
    kinds a ceiling is optional and bounds the real part of the digits.

    >>> [str(b) for b in materialize(parse_alphabet('{10,11}x{10,11}i'))]
    ['10+10i', '10+11i', '11+10i', '11+11i']
    >>> materialize(parse_alphabet('2N'))
    Traceback (most recent call last):
      ...
    cfdim.alphabet.AlphabetError: alphabet '2N' is infinite; give a ceiling

    """
    _check_mode(ceiling_mode)
    limit = _effective_ceiling(spec, ceiling)
    kind, params = spec.kind, spec.params
    if kind in _INFINITE_KINDS:
        if limit is None:
            raise AlphabetError('alphabet %r is infinite; give a ceiling'
                                % spec.text)
        warnings.warn('alphabet %r truncated at ceiling %d (%s mode); the '
                      'omitted tail is not accounted for'
                      % (spec.text, limit, ceiling_mode), TruncationWarning)
        if kind == 'progression':
            step = params[0]
            count = limit if ceiling_mode == 'index' else limit // step
            digits = [GaussianInt(step*j) for j in range(1, count+1)]
        else:
            n = params[0]
            high = n + limit - 1 if ceiling_mode == 'index' else limit
            digits = [GaussianInt(b) for b in range(n, high+1)]
    else:
        if kind == 'range':
            low, high = params
            digits = [GaussianInt(b) for b in range(low, high+1)]
        elif kind == 'rectangle':
            reals, imags = params
            digits = [GaussianInt(a, b) for a in reals for b in imags]
        elif kind == 'file':
            digits = list(params[1])
        else:
            digits = list(params)
        if limit is not None:
            digits = [b for b in digits if b.re <= limit]
    digits = sorted(set(digits), key=GaussianInt.sort_key)
    if not digits:
        raise AlphabetError('alphabet %r is empty under ceiling %r'
                            % (spec.text, limit))
    assert all(b.re >= 1 for b in digits)
    return digits


def ceiling_tail(spec, ceiling=None, ceiling_mode='value'):
    """Describe the digits an infinite spec loses under its ceiling.

    Returns ``(step, first)``: the omitted digits are ``first``,
    ``first + step``, ``first + 2*step``, ... . Returns None for finite
    kinds, which lose nothing.

    >>> ceiling_tail(parse_alphabet('3N'), ceiling=10)
    (3, 12)
    >>> ceiling_tail(parse_alphabet('F5'), ceiling=10, ceiling_mode='index')
    (1, 15)

    """
    if spec.kind not in _INFINITE_KINDS:
        return None
    _check_mode(ceiling_mode)
    limit = _effective_ceiling(spec, ceiling)
    if limit is None:
        raise AlphabetError('alphabet %r is infinite; give a ceiling'
                            % spec.text)
    if spec.kind == 'progression':
        step = spec.params[0]
        count = limit if ceiling_mode == 'index' else limit // step
        return (step, step*(count+1))
    n = spec.params[0]
    if ceiling_mode == 'index':
        return (1, n + limit)
    return (1, max(n, limit+1))
