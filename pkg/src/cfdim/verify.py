# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
===================
Verification suites
===================

Seeded property checks of the identities and inequalities the bounds
rest on. Each suite returns a ``SuiteReport``; failures are collected as
messages, never raised.

    lemmas:
        convergent duality identities in exact arithmetic, the derivative
        identity against a chain-rule product, and the telescoping
        product of p/q over the suffixes of a word.

    distortion:
        sampled derivative ratios against the distortion bounds.

    sandwich:
        the power sandwich between the k-sums and the direct kn-sum.

    >>> report = run_suite('sandwich')
    >>> report.passed
    True

"""

from __future__ import division

import logging
import random
from collections import namedtuple

from cfdim.convergents import Word, check_duality, p_at, q_at
from cfdim.distortion import (chain_rule_modulus, derivative_modulus,
                              sample_disk, verify_distortion)
from cfdim.gaussian import GaussianInt
from cfdim.pressure import sandwich_check


__all__ = ['SUITES', 'SuiteReport', 'distortion_suite', 'lemma_suite',
           'random_word', 'run_suite', 'sandwich_suite',
           'telescoping_product',
          ]

_logger = logging.getLogger(__name__)

SuiteReport = namedtuple('SuiteReport', 'name passed checks failures notes')

# Digit pools for random words.
REAL_DIGITS = tuple(GaussianInt(b) for b in range(1, 10))
COMPLEX_DIGITS = tuple(GaussianInt(a, b) for a in range(1, 5)
                       for b in range(-3, 4))


def random_word(rng, digits, length):
    return Word(rng.choice(digits) for _ in range(length))


def telescoping_product(w, z):
    """Return the product of |p/q| over the suffixes of w, at z.

    For w = (w1..wn) and s_i = (wi..wn) this is
    prod_i |p_{s_i}(z)/q_{s_i}(z)|, which equals 1/|q_w(z)|.
    """
    w = Word(w)
    product = 1.0
    for i in range(len(w)):
        suffix = w[i:]
        product *= abs(complex(p_at(suffix, z)))/abs(complex(q_at(suffix, z)))
    return product


def _close(x, y, rel):
    return abs(x - y) <= rel*max(abs(x), abs(y))


def lemma_suite(seed=0, words=1000, min_length=2, max_length=25):
    """Check the exact and numeric identities on random words.

    Half the words use real digits 1..9, half complex digits with real
    part 1..4 and imaginary part -3..3.
    """
    rng = random.Random(seed)
    failures = []
    checks = 0
    for i in range(words):
        digits = REAL_DIGITS if i % 2 == 0 else COMPLEX_DIGITS
        w = random_word(rng, digits, rng.randint(min_length, max_length))
        report = check_duality(w)
        checks += 1
        if not all(report):
            failures.append('duality %r for %s' % (report, w))
    points = sample_disk(202, seed)[2:]
    for i, z in enumerate(points):
        digits = REAL_DIGITS if i % 2 == 0 else COMPLEX_DIGITS
        w = random_word(rng, digits, rng.randint(min_length, max_length))
        exact = derivative_modulus(w, z)
        composed = chain_rule_modulus(w, z)
        checks += 1
        if not _close(exact, composed, 1e-10):
            failures.append('derivative identity at z=%r for %s: %r vs %r'
                            % (z, w, exact, composed))
        product = telescoping_product(w, z)
        checks += 1
        if not _close(product, exact**0.5, 1e-10):
            failures.append('telescoping product at z=%r for %s: %r vs %r'
                            % (z, w, product, exact**0.5))
    return SuiteReport('lemmas', not failures, checks, failures, [])


def distortion_suite(digits=(1, 2), k=5, samples=50, words=200, seed=0):
    """Check sampled ratios of random words of length k over digits.

    Real words must stay within the distortion bounds, reaching them only
    at the corner pairs. Complex words must stay within the sharp bounds;
    their excursions past the distortion bounds are listed as notes.
    """
    rng = random.Random(seed)
    digits = tuple(GaussianInt.coerce(b) for b in digits)
    failures = []
    notes = []
    for i in range(words):
        w = random_word(rng, digits, k)
        r = verify_distortion(w, samples, seed=seed + i)
        if w.is_real():
            if not (r.within and r.corners_attained
                    and r.extremes_only_at_corners):
                failures.append('distortion %r for %s' % (r, w))
        elif not r.sharp_within:
            failures.append('sharp distortion %r for %s' % (r, w))
        elif not r.within:
            notes.append('%s: %d sampled pairs beyond the real-digit bound'
                         % (w, r.violations))
    return SuiteReport('distortion', not failures, words, failures, notes)


def sandwich_suite(alphabets=((1, 2), (2, 3)), ks=(1, 2), n=2,
                   ts=(0.2, 0.5, 0.8)):
    """Check the strict power sandwich over a grid of cases."""
    failures = []
    checks = 0
    for digits in alphabets:
        for k in ks:
            for t in ts:
                r = sandwich_check(digits, k, n, t)
                checks += 1
                if not r.strict:
                    failures.append('sandwich %r for %r, k=%d, n=%d, t=%r'
                                    % (r, digits, k, n, t))
    return SuiteReport('sandwich', not failures, checks, failures, [])


SUITES = ('lemmas', 'distortion', 'sandwich')


def run_suite(name, seed=0, **options):
    """Run one suite by name; 'all' runs every suite and merges them."""
    if name == 'all':
        reports = []
        for suite in SUITES:
            relevant = options if suite == 'distortion' else {}
            reports.append(run_suite(suite, seed, **relevant))
        return SuiteReport('all', all(r.passed for r in reports),
                           sum(r.checks for r in reports),
                           [f for r in reports for f in r.failures],
                           [n for r in reports for n in r.notes])
    if name == 'lemmas':
        report = lemma_suite(seed)
    elif name == 'distortion':
        report = distortion_suite(seed=seed, **options)
    elif name == 'sandwich':
        report = sandwich_suite()
    else:
        raise ValueError('unknown suite %r; choose from %s or all'
                         % (name, ', '.join(SUITES)))
    _logger.info('suite %s: %d checks, %d failures', report.name,
                 report.checks, len(report.failures))
    return report
