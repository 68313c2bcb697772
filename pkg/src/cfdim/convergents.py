# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
========================
Generalized convergents
========================

For a word w = (w1, ..., wn) of digits, the generalized convergent

    phi_w(z) = 1/(w1 + 1/(w2 + ... + 1/(wn + z)))

is a quotient p_w(z)/q_w(z) whose numerator and denominator are linear in
z with Gaussian integer coefficients. They are generated by the two-term
recurrences

    q_n = wn*q_{n-1} + q_{n-2},     q_0 = 1, q_{-1} = 0
    p_n = wn*p_{n-1} + p_{n-2},     p_0 = 0, p_{-1} = 1

and q_w(z) = q_n + z*q_{n-1}, p_w(z) = p_n + z*p_{n-1}.

A ``ConvergentState`` carries only the last two terms of each recurrence,
so a word can be extended one digit at a time:

    >>> s = extend(None, 1)
    >>> s = extend(s, 2)
    >>> print(s.p_curr, s.q_curr)
    2 3

The convergent a_w = p_w(0)/q_w(0) is left unreduced:

    >>> convergent_value(Word([2, 2]))
    ComplexRational(2, 5)

Three duality identities tie a word to its shifted and reversed forms.
``check_duality`` verifies all of them in exact integer arithmetic:

    >>> check_duality(Word([1, 2]))
    DualityReport(shift=True, reversal=True, unit_shift=True)

"""

from __future__ import division

from collections import namedtuple

from cfdim.gaussian import ComplexRational, GaussianInt


__all__ = ['ConvergentState', 'DualityReport', 'EMPTY_STATE', 'Word',
           'check_duality', 'convergent_value', 'extend', 'p_at', 'q_at',
           'state_of',
          ]


class Word(tuple):
    """A finite tuple of GaussianInt digits."""

    def __new__(cls, digits=()):
        return super(Word, cls).__new__(
            cls, (GaussianInt.coerce(b) for b in digits))

    def dual(self):
        """Return the reversed word.

        >>> print(Word([1, 2, 3]).dual())
        (3, 2, 1)

        """
        return Word(reversed(self))

    def shift(self):
        """Return the word with its first digit dropped."""
        return Word(self[1:])

    def is_real(self):
        return all(b.is_real() for b in self)

    def __str__(self):
        return '(%s)' % ', '.join(str(b) for b in self)

    def __repr__(self):
        return 'Word([%s])' % ', '.join(repr(str(b)) if not b.is_real()
                                        else '%d' % b.re for b in self)


ConvergentState = namedtuple('ConvergentState',
                             'q_prev q_curr p_prev p_curr length')

EMPTY_STATE = ConvergentState(GaussianInt(0), GaussianInt(1),
                              GaussianInt(1), GaussianInt(0), 0)


def extend(state, digit):
    """Return the state of the word one digit longer.

    ``state`` may be None for the empty word.

    >>> extend(None, GaussianInt(1, 1)).q_curr
    GaussianInt(1, 1)
    >>> s = extend(extend(extend(None, 1), 1), 1)
    >>> print(s.p_curr, s.q_curr)
    2 3

    """
    if state is None:
        state = EMPTY_STATE
    b = GaussianInt.coerce(digit)
    if b.re < 1:
        raise ValueError('digit %s has nonpositive real part' % b)
    return ConvergentState(state.q_curr, b*state.q_curr + state.q_prev,
                           state.p_curr, b*state.p_curr + state.p_prev,
                           state.length + 1)


def state_of(word):
    """Build the state of word from scratch."""
    state = EMPTY_STATE
    for b in word:
        state = extend(state, b)
    return state


def _as_state(w):
    if isinstance(w, ConvergentState):
        return w
    return state_of(w)


def _linear(const, slope, z):
    # Exact for Gaussian-integer z; floating for anything complex.
    if isinstance(z, (int, GaussianInt)) and not isinstance(z, bool):
        return const + GaussianInt.coerce(z)*slope
    if isinstance(z, ComplexRational):
        return ComplexRational(const*z.den + slope*z.num, z.den)
    return complex(const) + complex(z)*complex(slope)


def q_at(w, z):
    """Evaluate the denominator q_w(z) = q_n + z*q_{n-1}.

    ``w`` is a word or a ConvergentState. The result is exact when z is an
    int, GaussianInt or ComplexRational and a Python complex otherwise.

    >>> q_at(Word([1, 2]), 1)
    GaussianInt(4, 0)
    >>> q_at(Word([2]), 0)
    GaussianInt(2, 0)

    """
    s = _as_state(w)
    return _linear(s.q_curr, s.q_prev, z)


def p_at(w, z):
    """Evaluate the numerator p_w(z) = p_n + z*p_{n-1}."""
    s = _as_state(w)
    return _linear(s.p_curr, s.p_prev, z)


def convergent_value(w):
    """Return a_w = p_w(0)/q_w(0) as an unreduced ComplexRational.

    >>> convergent_value(Word([1, 2])) == ComplexRational(2, 3)
    True

    """
    s = _as_state(w)
    return ComplexRational(s.p_curr, s.q_curr)


DualityReport = namedtuple('DualityReport', 'shift reversal unit_shift')


def check_duality(word):
    """Check the three convergent duality identities for word.

    shift:
        p_w(z) = q_{w2..wn}(z) as polynomials in z (needs n >= 2;
        reported as None for single digits).

    reversal:
        q_w(0) equals q of the reversed word at 0.

    unit_shift:
        q_w(1) = q_w(0) + p_{reversed w}(0).

    Failures are reported, never raised.
    """
    word = Word(word)
    if not word:
        raise ValueError('duality needs a nonempty word')
    state = state_of(word)
    dual_state = state_of(word.dual())
    if len(word) >= 2:
        shifted = state_of(word.shift())
        shift = (state.p_curr == shifted.q_curr
                 and state.p_prev == shifted.q_prev)
    else:
        shift = None
    reversal = state.q_curr == dual_state.q_curr
    unit_shift = q_at(state, 1) == state.q_curr + dual_state.p_curr
    return DualityReport(shift, reversal, unit_shift)
