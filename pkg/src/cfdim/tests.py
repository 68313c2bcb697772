# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.


"""Unit test suites for the cfdim package.

This module is considered a private implementation detail and is subject
to change without notice.

Run with ``python -m cfdim.tests``. Slow tests are skipped unless
``--do-expensive-tests`` is given or CFDIM_EXPENSIVE_TESTS=1 is set.
"""

from __future__ import division

import argparse
import csv
import doctest
import io
import itertools
import json
import math
import os
import random
import sys
import tempfile
import unittest
import warnings
from fractions import Fraction
from unittest import mock

import mpmath


# Conditionally hack the PYTHONPATH.
if __name__ == '__main__':
    path = os.path.dirname(__file__)
    parent, here = os.path.split(path)
    sys.path.append(parent)


# Modules being tested:
import cfdim
import cfdim.alphabet as alphabet
import cfdim.cli as cli
import cfdim.convergents as convergents
import cfdim.distortion as distortion
import cfdim.enumeration as enumeration
import cfdim.gaussian as gaussian
import cfdim.pressure as pressure
import cfdim.rendering as rendering
import cfdim.solver as solver
import cfdim.tables as tables
import cfdim.utilities as utilities
import cfdim.verify as verify

from cfdim.alphabet import AlphabetError, TruncationWarning, parse_alphabet
from cfdim.convergents import Word
from cfdim.gaussian import ComplexRational, GaussianInt


# Dimension of the set of continued fractions with digits 1 and 2, known
# to many more places than any bound computed here.
DIM_E12 = 0.531280506

G = GaussianInt


# === Helper functions ===

def moran_root(bases, lo=0.0, hi=4.0):
    """Return t with sum(b**(-t) for b in bases) == 1, by plain bisection.

    >>> round(moran_root([2, 2]), 12)
    1.0

    """
    for _ in range(200):
        mid = (lo + hi)/2
        if math.fsum(b**(-mid) for b in bases) >= 1:
            lo = mid
        else:
            hi = mid
    return (lo + hi)/2


def fraction_value(word):
    """Return 1/(w1 + 1/(w2 + ... + 1/wn)) exactly, for real digits."""
    x = Fraction(0)
    for b in reversed(word):
        x = 1/(b.re + x)
    return x


def quiet_materialize(text, ceiling=None, ceiling_mode='value'):
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', TruncationWarning)
        return alphabet.materialize(parse_alphabet(text), ceiling,
                                    ceiling_mode)


# === Tests ====

# This is a magic function which automatically loads doctests and
# creates unit tests from them.
def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite())
    for module in (cfdim, alphabet, cli, convergents, distortion,
                   enumeration, gaussian, pressure, rendering, solver,
                   tables, utilities, verify):
        tests.addTests(doctest.DocTestSuite(module))
    return tests


def _want_expensive():
    return ('--do-expensive-tests' in sys.argv
            or os.environ.get('CFDIM_EXPENSIVE_TESTS') == '1')


def skip_if_too_expensive(testcase):
    """Decorator to skip a testcase if deemed too expensive for this run."""
    if _want_expensive():
        return testcase
    return unittest.skip("Too expensive for default run")(testcase)


class TestHelpers(unittest.TestCase):
    def test_moran_root(self):
        # 4**-t + 9**-t == 1 has its root between 0.39 and 0.40.
        t = moran_root([4, 9])
        self.assertTrue(0.39 < t < 0.40)
        self.assertAlmostEqual(4**-t + 9**-t, 1.0, places=12)

    def test_fraction_value(self):
        self.assertEqual(fraction_value(Word([1, 2])), Fraction(2, 3))


class TestMetadata(unittest.TestCase):
    """Check metadata for the cfdim package."""
    private_message = "private implementation detail"
    public_modules = (cfdim, alphabet, cli, convergents, distortion,
                      enumeration, gaussian, pressure, rendering, solver,
                      tables, verify)

    def test_module_docstrings(self):
        modules = list(self.public_modules) + [utilities]
        if __name__ == '__main__':
            import __main__
            modules.append(__main__)
        for module in modules:
            self.assertTrue(isinstance(module.__doc__, str),
                            'module %s has no docstring' % module.__name__)

    def test_private_modules_are_documented_as_such(self):
        self.assertTrue(self.private_message in __doc__)
        for module in (utilities,):
            self.assertTrue(self.private_message in module.__doc__)

    def check_contents_of_all(self, module):
        """Check everything in __all__ exists and is public."""
        for name in module.__all__:
            self.assertFalse(name.startswith("_"),
                'private name "%s" in %s.__all__' % (name, module.__name__)
                )
            self.assertTrue(hasattr(module, name),
                'missing name "%s" in %s.__all__' % (name, module.__name__)
                )

    def test_meta(self):
        for module in self.public_modules:
            self.assertTrue(hasattr(module, '__all__'))
            self.check_contents_of_all(module)
        for meta in ["__version__", "__date__", "__author__",
                     "__author_email__"]:
            self.assertTrue(hasattr(cfdim, meta), "%s not present" % meta)


class UtilitiesTests(unittest.TestCase):
    """Test suite for the cfdim.utilities module."""

    def test_log_int_small(self):
        for n in list(range(1, 200)) + [10**15, 2**53 + 1]:
            self.assertAlmostEqual(utilities.log_int(n), math.log(n),
                                   places=12)

    def test_log_int_huge(self):
        n = 3**5000
        expected = 5000*math.log(3)
        self.assertAlmostEqual(utilities.log_int(n)/expected, 1.0, places=14)

    def test_log_int_rejects_nonpositive(self):
        self.assertRaises(ValueError, utilities.log_int, 0)
        self.assertRaises(ValueError, utilities.log_int, -5)

    def test_memory_cap(self):
        with mock.patch.dict(os.environ, {'CFDIM_MEM_CAP': ''}):
            self.assertEqual(utilities.memory_cap(),
                             utilities.DEFAULT_MEM_CAP)
        with mock.patch.dict(os.environ, {'CFDIM_MEM_CAP': '1000'}):
            self.assertEqual(utilities.memory_cap(), 1000)
        with mock.patch.dict(os.environ, {'CFDIM_MEM_CAP': 'lots'}):
            self.assertRaises(ValueError, utilities.memory_cap)
        with mock.patch.dict(os.environ, {'CFDIM_MEM_CAP': '0'}):
            self.assertRaises(ValueError, utilities.memory_cap)

    def test_stopwatch(self):
        ticks = iter([1.0, 3.5, 10.0, 10.25])
        timer = utilities.Stopwatch(lambda: next(ticks))
        with timer:
            pass
        timer.start()
        timer.stop()
        self.assertEqual(timer.elapsed, 2.75)
        timer.reset()
        self.assertEqual(timer.elapsed, 0.0)
        self.assertRaises(RuntimeError, timer.stop)

    def test_solver_stats(self):
        stats = utilities.SolverStats()
        for what in ('evaluation', 'evaluation', 'doubling', 'bisection'):
            stats.update(what)
        self.assertEqual((stats.evaluations, stats.doublings,
                          stats.bisections), (2, 1, 1))
        self.assertTrue(repr(stats).startswith('SolverStats('))


class GaussianTest(unittest.TestCase):
    """Test suite for the cfdim.gaussian module."""

    def test_arithmetic(self):
        self.assertEqual(G(2, 1)*G(3, -4), G(10, -5))
        self.assertEqual(G(2, 1) + 3, G(5, 1))
        self.assertEqual(3 - G(2, 1), G(1, -1))
        self.assertEqual(-G(2, -7), G(-2, 7))
        self.assertEqual(gaussian.gi_add(1, G(0, 1)), G(1, 1))
        self.assertEqual(gaussian.gi_mul(G(0, 1), G(0, 1)), G(-1))

    def test_norm_is_multiplicative(self):
        rng = random.Random(17)
        for _ in range(200):
            x = G(rng.randint(-10**12, 10**12), rng.randint(-10**12, 10**12))
            y = G(rng.randint(-999, 999), rng.randint(-999, 999))
            self.assertEqual((x*y).norm(), x.norm()*y.norm())

    def test_conjugate(self):
        x = G(7, -3)
        self.assertEqual(x*x.conjugate(), G(x.norm()))

    def test_equality_and_hash(self):
        self.assertEqual(G(5), 5)
        self.assertEqual(hash(G(5)), hash(5))
        self.assertNotEqual(G(5, 1), 5)
        self.assertEqual(len({G(1, 2), G(1, 2), G(2, 1)}), 2)

    def test_immutable(self):
        x = G(1, 1)
        self.assertRaises(AttributeError, setattr, x, 'foo', 1)

    def test_coerce(self):
        self.assertEqual(G.coerce(3), G(3, 0))
        self.assertEqual(G.coerce(2+3j), G(2, 3))
        self.assertRaises(TypeError, G.coerce, True)
        self.assertRaises(TypeError, G.coerce, 1.5)
        self.assertRaises(TypeError, G, 1.0, 2)
        self.assertRaises(TypeError, G, True, False)
        self.assertRaises(TypeError, G, 2, True)

    def test_log_modulus(self):
        self.assertAlmostEqual(gaussian.gi_log_modulus(G(3, 4)),
                               math.log(5), places=14)
        self.assertAlmostEqual(gaussian.gi_log_modulus(-7), math.log(7),
                               places=14)
        big = G(2**3000, 2**3000)
        expected = 3000*math.log(2) + 0.5*math.log(2)
        self.assertAlmostEqual(gaussian.gi_log_modulus(big)/expected, 1.0,
                               places=14)
        self.assertRaises(ValueError, gaussian.gi_log_modulus, 0)

    def test_text_round_trip(self):
        for text in ('7', '1+i', '1-i', '2-3i', '10+11i', '0+i'):
            self.assertEqual(str(gaussian.parse_gaussian(text)), text)
        self.assertEqual(gaussian.parse_gaussian('i'), G(0, 1))
        self.assertEqual(gaussian.parse_gaussian('-2i'), G(0, -2))

    def test_parse_errors(self):
        for text in ('', 'abc', '1+', '1.5', '2 3'):
            self.assertRaises(ValueError, gaussian.parse_gaussian, text)

    def test_complex_rational(self):
        self.assertEqual(ComplexRational(G(2, 2), G(1, 1)), 2)
        self.assertNotEqual(ComplexRational(1, 3), ComplexRational(1, 2))
        self.assertEqual(ComplexRational(1, 2) + ComplexRational(1, 3),
                         ComplexRational(5, 6))
        self.assertEqual(ComplexRational(G(1, 1), 2).modulus_squared(),
                         Fraction(1, 2))
        x = ComplexRational(G(1, 2), G(3, -1))
        self.assertEqual((x.real(), x.imag()),
                         (Fraction(1, 10), Fraction(7, 10)))
        self.assertTrue(abs(complex(x) - complex(1, 2)/complex(3, -1)) < 1e-15)
        self.assertRaises(ZeroDivisionError, ComplexRational, 1, 0)


class AlphabetTest(unittest.TestCase):
    """Test suite for the cfdim.alphabet module."""

    def test_kinds(self):
        cases = [('{1,2}', 'explicit'), ('{2..5}', 'range'),
                 ('2N', 'progression'), ('N', 'progression'),
                 ('F3', 'cofinite'), ('{2..5}x{-8..8}i', 'rectangle'),
                 ('{1+i, 1-i, 2+i, 2-i}', 'explicit')]
        for text, kind in cases:
            self.assertEqual(parse_alphabet(text).kind, kind)
        self.assertEqual(parse_alphabet('N').params, (1,))

    def test_mixed_explicit(self):
        digits = alphabet.materialize(parse_alphabet('{7, 1..3, 2+i}'))
        self.assertEqual([str(b) for b in digits],
                         ['1', '2', '2+i', '3', '7'])

    def test_invalid(self):
        for text in ('{0,1}', '{}', '{3..1}', 'F0', '0N', 'foo', '{1, x}',
                     '{-1+i}', '{0..2}x{1}i', '   '):
            self.assertRaises(AlphabetError, parse_alphabet, text)
        self.assertRaises(TypeError, parse_alphabet, 12)

    def test_dedup_and_sort(self):
        digits = alphabet.materialize(parse_alphabet('{2,1,2}'))
        self.assertEqual(digits, [G(1), G(2)])
        digits = alphabet.materialize(parse_alphabet('{2-i,1+i,1-i}'))
        self.assertEqual(digits, [G(1, -1), G(1, 1), G(2, -1)])

    def test_rectangle(self):
        digits = alphabet.materialize(parse_alphabet('{2..5}x{-8..8}i'))
        self.assertEqual(len(digits), 68)
        self.assertTrue(all(b.re >= 2 for b in digits))

    def test_ceilings(self):
        self.assertEqual(quiet_materialize('3N', 10), [G(3), G(6), G(9)])
        self.assertEqual(quiet_materialize('3N', 3, 'index'),
                         [G(3), G(6), G(9)])
        self.assertEqual(len(quiet_materialize('F3', 10)), 8)
        self.assertEqual(quiet_materialize('F3', 10, 'index')[-1], G(12))
        self.assertEqual(quiet_materialize('{1..10}', 3),
                         [G(1), G(2), G(3)])
        self.assertEqual(len(quiet_materialize('2N', 1e6)), 500000)

    def test_ceiling_errors(self):
        spec = parse_alphabet('2N')
        self.assertRaises(AlphabetError, alphabet.materialize, spec)
        self.assertRaises(AlphabetError, alphabet.materialize, spec, 0)
        self.assertRaises(ValueError, alphabet.materialize, spec, 10, 'size')
        self.assertRaises(AlphabetError, alphabet.materialize,
                          parse_alphabet('{5,6}'), 3)
        self.assertRaises(AlphabetError, parse_alphabet, '2N', 2.5)

    def test_truncation_warning(self):
        with self.assertWarns(TruncationWarning):
            alphabet.materialize(parse_alphabet('F5'), ceiling=20)
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            alphabet.materialize(parse_alphabet('{1,2}'))

    def test_cardinality_matches_materialize(self):
        cases = [('{1,2}', None), ('{2..5}', None), ('{2..5}', 3),
                 ('{2,3}x{-2..2}i', None), ('7N', 100), ('F11', 50)]
        for text, ceiling in cases:
            spec = parse_alphabet(text)
            for mode in alphabet.CEILING_MODES:
                expected = len(quiet_materialize(text, ceiling, mode))
                self.assertEqual(alphabet.cardinality(spec, ceiling, mode),
                                 expected, (text, ceiling, mode))

    def test_load_alphabet(self):
        with tempfile.TemporaryDirectory() as where:
            path = os.path.join(where, 'powers.txt')
            with open(path, 'w') as f:
                f.write('# powers of two\n')
                for j in range(4, 21):
                    f.write('%d\n' % 2**j)
                f.write('\n16  # again\n')
            spec = alphabet.load_alphabet(path)
            digits = alphabet.materialize(spec)
            self.assertEqual(len(digits), 17)
            self.assertEqual(digits[0], G(16))
            self.assertEqual(digits[-1], G(2**20))
            bad = os.path.join(where, 'bad.txt')
            with open(bad, 'w') as f:
                f.write('3\nthree\n')
            self.assertRaises(AlphabetError, alphabet.load_alphabet, bad)
            empty = os.path.join(where, 'empty.txt')
            with open(empty, 'w') as f:
                f.write('# nothing\n')
            self.assertRaises(AlphabetError, alphabet.load_alphabet, empty)

    def test_alphabet_text_round_trip(self):
        for text in ('{1,2}', '{2..5}', '2N', 'F3', '{2..5}x{-8..8}i',
                     '{10,11}x{10,11}i', '{1+i,2-i}'):
            spec = parse_alphabet(text)
            again = parse_alphabet(alphabet.alphabet_text(spec))
            self.assertEqual(again.kind, spec.kind)
            self.assertEqual(again.params, spec.params)

    def test_queries(self):
        self.assertTrue(alphabet.is_finite(parse_alphabet('{1,2}')))
        self.assertFalse(alphabet.is_finite(parse_alphabet('F2')))
        self.assertTrue(alphabet.is_real([G(1), G(5)]))
        self.assertFalse(alphabet.is_real([G(1), G(5, 1)]))

    def test_ceiling_tail(self):
        self.assertIsNone(alphabet.ceiling_tail(parse_alphabet('{1,2}')))
        self.assertEqual(alphabet.ceiling_tail(parse_alphabet('F3'), 10),
                         (1, 11))
        self.assertEqual(
            alphabet.ceiling_tail(parse_alphabet('2N'), 10, 'index'),
            (2, 22))


class ConvergentsTest(unittest.TestCase):
    """Test suite for the cfdim.convergents module."""

    def random_word(self, rng, complex_digits=False, length=None):
        if length is None:
            length = rng.randint(1, 12)
        if complex_digits:
            return Word(G(rng.randint(1, 4), rng.randint(-3, 3))
                        for _ in range(length))
        return Word(G(rng.randint(1, 9)) for _ in range(length))

    def test_examples(self):
        s = convergents.state_of(Word([1, 2]))
        self.assertEqual((s.p_curr, s.q_curr), (G(2), G(3)))
        self.assertEqual(s.length, 2)
        s = convergents.state_of(Word([1, 1, 1]))
        self.assertEqual((s.p_curr, s.q_curr), (G(2), G(3)))
        self.assertEqual(convergents.EMPTY_STATE.q_curr, G(1))

    def test_real_convergents_match_fraction(self):
        rng = random.Random(3)
        for _ in range(200):
            w = self.random_word(rng)
            a = convergents.convergent_value(w)
            self.assertEqual(Fraction(a.num.re, a.den.re), fraction_value(w))

    def test_complex_convergents_match_floats(self):
        rng = random.Random(4)
        for _ in range(200):
            w = self.random_word(rng, True, rng.randint(1, 6))
            x = 0j
            for b in reversed(w):
                x = 1/(complex(b) + x)
            a = complex(convergents.convergent_value(w))
            self.assertTrue(abs(a - x) <= 1e-12*abs(x))

    def test_linear_forms(self):
        w = Word([1, 2])
        self.assertEqual(convergents.q_at(w, 1), G(4))
        self.assertEqual(convergents.p_at(w, 1), G(3))
        self.assertEqual(convergents.q_at(w, ComplexRational(1, 2)),
                         ComplexRational(7, 2))
        self.assertEqual(convergents.q_at(w, 0.5j), complex(3, 0.5))

    def test_map_value(self):
        # phi_w(z) = p_w(z)/q_w(z) for real z.
        w = Word([2, 3, 1])
        x = Fraction(1, 3)
        for b in reversed(w):
            x = 1/(b.re + x)
        # Both forms share the denominator 3 of z.
        q = convergents.q_at(w, ComplexRational(1, 3))
        p = convergents.p_at(w, ComplexRational(1, 3))
        self.assertEqual(ComplexRational(p.num, q.num),
                         ComplexRational(x.numerator, x.denominator))

    def test_invalid_digit(self):
        self.assertRaises(ValueError, convergents.extend, None, 0)
        self.assertRaises(ValueError, convergents.extend, None, G(0, 1))
        self.assertRaises(TypeError, convergents.extend, None, 'x')

    def test_duality(self):
        rng = random.Random(5)
        for i in range(300):
            w = self.random_word(rng, i % 2 == 1, rng.randint(2, 25))
            self.assertEqual(convergents.check_duality(w),
                             (True, True, True), w)
        report = convergents.check_duality(Word([3]))
        self.assertEqual(report, (None, True, True))
        self.assertRaises(ValueError, convergents.check_duality, Word())

    def test_word(self):
        w = Word([1, 2, G(3, 1)])
        self.assertEqual(w.dual(), Word([G(3, 1), 2, 1]))
        self.assertEqual(w.shift(), Word([2, G(3, 1)]))
        self.assertFalse(w.is_real())
        self.assertTrue(Word([4, 5]).is_real())
        self.assertEqual(str(Word([1, G(1, -1)])), '(1, 1-i)')


class WeightsMixin:
    """Checks shared by the enumeration test cases."""

    def check_terms(self, weights, digits, k):
        states = list(enumeration.iter_states(digits, k))
        expected = [enumeration.weight_term(state) for word, state in states]
        actual = list(weights.terms())
        self.assertEqual(len(actual), len(expected))
        self.assertEqual(weights.count, len(expected))
        for a, e in zip(actual, expected):
            self.assertAlmostEqual(a.log_q, e.log_q, places=12)
            self.assertAlmostEqual(a.log_1pa, e.log_1pa, places=12)
        # Rebuild some leaves from their digits alone.
        rng = random.Random(k)
        for i in rng.sample(range(len(states)), min(100, len(states))):
            word, state = states[i]
            rebuilt = convergents.state_of(word)
            self.assertEqual(rebuilt, state)
            term = enumeration.weight_term(rebuilt)
            self.assertAlmostEqual(actual[i].log_q, term.log_q, places=12)
            self.assertAlmostEqual(actual[i].log_1pa, term.log_1pa,
                                   places=12)


class EnumerationTest(unittest.TestCase, WeightsMixin):
    """Test suite for the cfdim.enumeration module."""

    def test_word_order(self):
        digits = [G(1), G(2), G(3)]
        words = [tuple(w) for w, s in enumeration.iter_states(digits, 3)]
        self.assertEqual(words, list(itertools.product(digits, repeat=3)))

    def test_stored_real(self):
        digits = [G(1), G(2), G(5)]
        self.check_terms(enumeration.enumerate_weights(digits, 5), digits, 5)

    def test_stored_complex(self):
        digits = [G(1, 1), G(2), G(3, -2)]
        self.check_terms(enumeration.enumerate_weights(digits, 4), digits, 4)

    def test_streamed_matches_stored(self):
        for digits in ([G(2), G(3)], [G(1, 1), G(1, -1), G(2)]):
            stored = enumeration.enumerate_weights(digits, 6, 'stored')
            for shards in (1, 3, 5):
                streamed = enumeration.enumerate_weights(
                    digits, 6, 'streamed', shards=shards)
                self.assertEqual(streamed.mode, 'streamed')
                self.assertEqual(list(streamed.terms()),
                                 list(stored.terms()))

    def test_small_chunks(self):
        real, raw = enumeration._raw_digits([G(1), G(2), G(3)])
        subtree = enumeration.Subtree(((),))
        chunks = list(enumeration._walk(real, raw, 5, subtree, chunk=7))
        self.assertTrue(len(chunks) > 1)
        stored = enumeration.enumerate_weights([1, 2, 3], 5)
        self.assertEqual(sum((c[0].tolist() for c in chunks), []),
                         stored.log_q.tolist())

    def test_log_1pa_is_relatively_accurate(self):
        # a_w is close to 1e-6 here, far below the size of log_q.
        for digit, k in ((G(10**6), 30), (G(10**6, 1), 20)):
            weights = enumeration.enumerate_weights([digit], k)
            s = convergents.state_of(Word([digit]*k))
            with mpmath.workdps(40):
                ratio = (mpmath.mpf((s.q_curr + s.p_curr).norm())
                         / s.q_curr.norm())
                exact = float(mpmath.log(ratio)/2)
            got = weights.log_1pa[0]
            self.assertTrue(abs(got - exact) <= 1e-14*abs(exact),
                            (digit, got, exact))

    def test_partition_tree(self):
        digits = [1, 2, 3]
        subtrees = enumeration.partition_tree(digits, 4, 5)
        self.assertEqual([len(s.prefixes) for s in subtrees],
                         [2, 2, 2, 2, 1])
        prefixes = [p for s in subtrees for p in s.prefixes]
        self.assertEqual(prefixes,
                         [(i, j) for i in range(3) for j in range(3)])
        self.assertEqual(len(enumeration.partition_tree(digits, 1, 5)), 3)
        self.assertRaises(ValueError, enumeration.partition_tree,
                          digits, 4, 0)

    def test_memory_cap(self):
        self.assertRaises(enumeration.MemoryCapError,
                          enumeration.enumerate_weights, [1, 2], 5,
                          'stored', mem_cap=10)
        weights = enumeration.enumerate_weights([1, 2], 5, mem_cap=10)
        self.assertEqual(weights.mode, 'streamed')
        self.assertEqual(weights.count, 32)
        with mock.patch.dict(os.environ, {'CFDIM_MEM_CAP': '8'}):
            weights = enumeration.enumerate_weights([1, 2], 4)
            self.assertEqual(weights.mode, 'streamed')

    def test_invalid(self):
        self.assertRaises(ValueError, enumeration.enumerate_weights,
                          [1, 2], 0)
        self.assertRaises(ValueError, enumeration.enumerate_weights, [], 3)
        self.assertRaises(ValueError, enumeration.enumerate_weights,
                          [1, 2], 3, 'cached')
        self.assertRaises(ValueError, enumeration.enumerate_weights,
                          [G(0, 1)], 3)

    def test_parallel_stored_identical(self):
        single = enumeration.enumerate_weights([2, 3, 4], 7)
        double = enumeration.enumerate_weights([2, 3, 4], 7, threads=2)
        self.assertEqual(single.log_q.tolist(), double.log_q.tolist())
        self.assertEqual(single.log_1pa.tolist(), double.log_1pa.tolist())

    def test_parallel_streamed_identical(self):
        with enumeration.StreamedWeights([2, 3, 4], 6, threads=2) as w:
            values = w.map_chunks(pressure._chunk_lse, '-', 0.5)
        single = enumeration.StreamedWeights([2, 3, 4], 6, shards=2)
        self.assertEqual(values,
                         single.map_chunks(pressure._chunk_lse, '-', 0.5))


class DistortionTest(unittest.TestCase):
    """Test suite for the cfdim.distortion module."""

    def test_derivative_examples(self):
        self.assertEqual(distortion.derivative_modulus(Word([1]), 0), 1.0)
        self.assertEqual(distortion.derivative_modulus(Word([2]), 0), 0.25)
        self.assertAlmostEqual(distortion.derivative_modulus(Word([1, 2]), 0),
                               1/9, places=15)

    def test_disk_point(self):
        for z in (0, 1, 0.5+0.5j, 0.5-0.5j, 0.3+0.1j):
            distortion.DiskPoint(z)
        for z in (-0.1, 1.1, 0.5+0.6j, 2j):
            self.assertRaises(ValueError, distortion.DiskPoint, z)

    def test_chain_rule_agrees(self):
        rng = random.Random(11)
        points = distortion.sample_disk(102, seed=11)[2:]
        for i, z in enumerate(points):
            if i % 2:
                w = Word(G(rng.randint(1, 4), rng.randint(-3, 3))
                         for _ in range(rng.randint(1, 15)))
            else:
                w = Word(G(rng.randint(1, 9)) for _ in range(rng.randint(1, 15)))
            a = distortion.derivative_modulus(w, z)
            b = distortion.chain_rule_modulus(w, z)
            self.assertTrue(abs(a - b) <= 1e-10*a, (w, z, a, b))

    def test_bounds_examples(self):
        F = Fraction
        self.assertEqual(distortion.distortion_bounds(Word([1])),
                         (F(1, 4), F(4)))
        self.assertEqual(distortion.distortion_bounds(Word([2])),
                         (F(4, 9), F(9, 4)))
        self.assertEqual(distortion.distortion_bounds(Word([1, 2])),
                         (F(9, 16), F(16, 9)))

    def test_bounds_are_reciprocal(self):
        rng = random.Random(12)
        for _ in range(100):
            w = Word(G(rng.randint(1, 5), rng.randint(-2, 2))
                     for _ in range(rng.randint(1, 10)))
            lower, upper = distortion.distortion_bounds(w)
            self.assertEqual(lower*upper, 1)

    def test_sharp_matches_real_bounds(self):
        rng = random.Random(13)
        for _ in range(50):
            w = Word(G(rng.randint(1, 9)) for _ in range(rng.randint(1, 10)))
            lower, upper = distortion.distortion_bounds(w)
            sharp_lower, sharp_upper = distortion.sharp_distortion(w)
            self.assertAlmostEqual(sharp_lower/float(lower), 1.0, places=12)
            self.assertAlmostEqual(sharp_upper/float(upper), 1.0, places=12)

    def test_verify_real_word(self):
        r = distortion.verify_distortion(Word([2, 3]), 100, seed=1)
        self.assertTrue(r.within)
        self.assertIs(r.corners_attained, True)
        self.assertTrue(r.extremes_only_at_corners)
        self.assertTrue(r.sharp_within)
        self.assertEqual(r.violations, 0)

    def test_one_plus_i_exceeds_real_bound(self):
        w = Word([G(1, 1)])
        lower, upper = distortion.distortion_bounds(w)
        self.assertEqual(upper, Fraction(5, 2))
        sharp_lower, sharp_upper = distortion.sharp_distortion(w)
        self.assertTrue(sharp_upper > 3.1)
        r = distortion.verify_distortion(w, 200, seed=2)
        self.assertFalse(r.within)
        self.assertTrue(r.violations > 0)
        self.assertTrue(r.sharp_within)
        self.assertTrue(r.corners_attained)

    def test_word_beyond_float_range(self):
        # |q_w| is about 10**320 here, past the largest double.
        w = Word([100]*160)
        self.assertTrue(distortion.derivative_modulus(w, 0.5) < 1e-300)
        lower, upper = distortion.distortion_bounds(w)
        sharp_lower, sharp_upper = distortion.sharp_distortion(w)
        self.assertAlmostEqual(sharp_lower/float(lower), 1.0, places=12)
        self.assertAlmostEqual(sharp_upper/float(upper), 1.0, places=12)
        r = distortion.verify_distortion(w, 4)
        self.assertTrue(r.within)
        self.assertIs(r.corners_attained, True)
        self.assertEqual(r.violations, 0)

    def test_sampling(self):
        points = distortion.sample_disk(500, seed=3)
        self.assertEqual(points[:2], [0j, 1+0j])
        self.assertEqual(points, distortion.sample_disk(500, seed=3))
        on_boundary = sum(1 for z in points[2:]
                          if abs(abs(z - 0.5) - 0.5) < 1e-12)
        self.assertTrue(0.6 < on_boundary/498 < 0.8)
        for z in points:
            distortion.DiskPoint(z)
        self.assertRaises(ValueError, distortion.sample_disk, 1)


class PressureTest(unittest.TestCase):
    """Test suite for the cfdim.pressure module."""

    def curve(self, digits, k, sign, **kwargs):
        weights = enumeration.enumerate_weights(digits, k, **kwargs)
        return pressure.pressure_curve(weights, sign)

    def test_singleton(self):
        c = self.curve([2], 1, '-')
        for t in (0.0, 0.3, 1.0, 2.5):
            self.assertAlmostEqual(pressure.eval_pressure(c, t),
                                   -2*t*math.log(3), places=12)

    def test_four_terms(self):
        c = self.curve([1, 2], 2, '-')
        expected = 0.5*math.log(1/3 + 1/5 + 1/4 + 1/7)
        self.assertAlmostEqual(pressure.eval_pressure(c, 0.5), expected,
                               places=12)

    def test_value_at_zero(self):
        for digits in ([1, 2], [2, 3, 7], [G(1, 1), G(2), G(2, -1)]):
            for k in range(1, 6):
                for sign in pressure.SIGNS:
                    c = self.curve(digits, k, sign)
                    self.assertAlmostEqual(pressure.eval_pressure(c, 0),
                                           math.log(len(digits)), places=12)

    def test_negative_t(self):
        c = self.curve([1, 2], 2, '-')
        self.assertRaises(ValueError, pressure.eval_pressure, c, -0.1)
        self.assertRaises(ValueError, pressure.pressure_curve,
                          c.weights, '0')

    def test_validity(self):
        flag = pressure.validity(self.curve([1, 2], 1, '+'))
        self.assertEqual(flag, (False, 1))
        self.assertEqual(pressure.validity(self.curve([1, 2], 2, '+')),
                         (True, 0))
        complex_digits = [G(1, 1), G(1, -1), G(2, 1), G(3)]
        self.assertTrue(pressure.validity(
            self.curve(complex_digits, 3, '-')).monotone)

    def test_matches_direct_sum(self):
        for digits, k in (([1, 2, 3], 4), ([G(1, 1), G(2), G(2, -1)], 3)):
            weights = enumeration.enumerate_weights(digits, k)
            for sign in pressure.SIGNS:
                c = pressure.pressure_curve(weights, sign)
                for t in (0.2, 0.7, 1.3):
                    self.assertAlmostEqual(
                        pressure.log_sum(c, t),
                        pressure.direct_sum(digits, k, t, sign), places=12)

    def test_dual_sum_equality(self):
        for digits, k in (([1, 2, 3], 4), ([G(1, 1), G(2), G(2, -1)], 3)):
            for sign in pressure.SIGNS:
                for t in (0.3, 0.9):
                    a = pressure.direct_sum(digits, k, t, sign, dual=True)
                    b = pressure.direct_sum(digits, k, t, sign)
                    self.assertTrue(abs(a - b) <= 1e-12*max(1, abs(b)))

    def test_convexity(self):
        grid = [i/10 for i in range(21)]
        for digits, k in (([2, 3], 4), ([1, 2], 3)):
            for sign in pressure.SIGNS:
                c = self.curve(digits, k, sign)
                if not pressure.validity(c).monotone:
                    continue
                values = [pressure.eval_pressure(c, t) for t in grid]
                for a, b, d in zip(values, values[1:], values[2:]):
                    self.assertTrue(a - 2*b + d >= -1e-9)
                    self.assertTrue(b < a)

    def test_streamed_matches_stored(self):
        stored = self.curve([2, 3, 5], 6, '+', mode='stored')
        streamed = self.curve([2, 3, 5], 6, '+', mode='streamed', shards=4)
        for t in (0.1, 0.5, 0.9):
            self.assertAlmostEqual(pressure.eval_pressure(stored, t),
                                   pressure.eval_pressure(streamed, t),
                                   places=13)

    def test_sandwich(self):
        r = pressure.sandwich_check([1, 2], 1, 2, 0.5)
        self.assertTrue(r.holds and r.strict)
        self.assertTrue(r.lower < r.middle < r.upper)
        self.assertTrue(pressure.sandwich_check([2, 3], 2, 2, 0.3).strict)
        self.assertTrue(pressure.sandwich_check([1, 2], 1, 1, 0.5).holds)
        flat = pressure.sandwich_check([1, 2], 2, 1, 0.0)
        self.assertTrue(flat.holds)
        self.assertFalse(flat.strict)

    def test_sandwich_limit(self):
        self.assertRaises(ValueError, pressure.sandwich_check,
                          list(range(1, 11)), 3, 3, 0.5)
        self.assertRaises(ValueError, pressure.sandwich_check,
                          [1, 2], 1, 0, 0.5)


class SolverTest(unittest.TestCase):
    """Test suite for the cfdim.solver module."""

    def check_certificate(self, bounds):
        for bracket in bounds.brackets:
            if bracket is None:
                continue
            self.assertTrue(bracket.lo_value >= 0 or bracket.lo == 0)
            self.assertTrue(bracket.hi_value < 0 or bracket.hi == 0)
            self.assertTrue(bracket.hi - bracket.lo <= bounds.tolerance)

    def test_singleton(self):
        for k in (1, 3):
            b = solver.dimension_bounds([2], k)
            self.assertEqual((b.t_minus, b.t_plus), (0.0, 0.0))

    def test_one_two_first_level(self):
        b = solver.dimension_bounds([1, 2], 1)
        self.assertAlmostEqual(b.t_minus, moran_root([4, 9]), places=9)
        self.assertIsNone(b.t_plus)
        self.assertIn('1 word(s)', b.plus_reason)
        self.assertIn('increase k', b.plus_reason)
        self.check_certificate(b)

    def test_solve_root_tolerance(self):
        weights = enumeration.enumerate_weights([2, 3], 3)
        curve = pressure.pressure_curve(weights, '-')
        self.assertRaises(ValueError, solver.solve_root, curve, 0)
        root = solver.solve_root(curve, 1e-8)
        self.assertTrue(root.bracket.hi - root.bracket.lo <= 1e-8)
        self.assertTrue(root.bracket.lo_value >= 0 > root.bracket.hi_value)
        self.assertEqual(root.stats.evaluations,
                         2 + root.stats.doublings + root.stats.bisections)

    def test_residual(self):
        b = solver.dimension_bounds([2, 3], 5)
        weights = enumeration.enumerate_weights([2, 3], 5)
        for sign, t in (('-', b.t_minus), ('+', b.t_plus)):
            c = pressure.pressure_curve(weights, sign)
            residual = math.expm1(pressure.log_sum(c, t))
            slope = 2*math.log(3*4)
            self.assertTrue(abs(residual) <= 10*b.tolerance*slope*5)

    def test_known_dimension_bracketed(self):
        for k in range(2, 13):
            b = solver.dimension_bounds([1, 2], k)
            self.assertTrue(b.t_minus < DIM_E12 < b.t_plus, k)
            self.check_certificate(b)

    def test_ten_eleven(self):
        b = solver.dimension_bounds([10, 11], 16)
        self.assertAlmostEqual(b.t_minus, 0.146668, delta=5e-4)
        self.assertAlmostEqual(b.t_plus, 0.147231, delta=5e-4)
        self.assertEqual(b.term_count, 2**16)
        self.assertEqual(b.mode, 'stored')

    def test_two_three_contains_reference(self):
        b = solver.dimension_bounds([2, 3], 12)
        self.assertTrue(b.t_minus <= 0.334398 + 1e-6)
        self.assertTrue(b.t_plus >= 0.344864 - 1e-6)

    def test_sweep_monotone_and_rate(self):
        result = solver.sweep([2, 3], 10)
        self.assertTrue(result.minus_increasing)
        self.assertTrue(result.plus_decreasing)
        self.assertEqual(result.violations, [])
        self.assertEqual(result.caveats, [])
        bounds = result.bounds
        for before, after in zip(bounds, bounds[1:]):
            tol = 2*before.tolerance
            self.assertTrue(after.t_minus > before.t_minus - tol)
            self.assertTrue(after.t_plus < before.t_plus + tol)
        widths = result.widths
        self.assertTrue(all(w > 0 for w in widths))
        for k in (2, 3, 4, 5):
            ratio = widths[k-1]/widths[2*k-1]
            self.assertTrue(1.4 <= ratio <= 2.8, (k, ratio))
        self.assertTrue(result.rate_constant > 0)

    def test_sweep_singleton_and_caveat(self):
        result = solver.sweep([3], 4)
        self.assertEqual([(b.t_minus, b.t_plus) for b in result.bounds],
                         [(0.0, 0.0)]*4)
        result = solver.sweep([1, 2], 3)
        self.assertEqual(len(result.caveats), 1)
        self.assertIn('T_2^+', result.caveats[0])
        self.assertIsNone(result.widths[0])
        self.assertRaises(ValueError, solver.sweep, [1, 2], 1)

    def test_threads_agree(self):
        single = solver.dimension_bounds([2, 3], 10)
        double = solver.dimension_bounds([2, 3], 10, threads=2)
        self.assertTrue(abs(single.t_minus - double.t_minus) <= 1e-9)
        self.assertTrue(abs(single.t_plus - double.t_plus) <= 1e-9)

    def test_streamed_mode(self):
        stored = solver.dimension_bounds([2, 3, 4], 6)
        streamed = solver.dimension_bounds([2, 3, 4], 6, mode='streamed')
        self.assertEqual(streamed.tolerance, solver.DEFAULT_TOL_STREAMED)
        self.assertEqual(stored.tolerance, solver.DEFAULT_TOL_STORED)
        self.assertAlmostEqual(stored.t_minus, streamed.t_minus, delta=2e-6)
        self.assertAlmostEqual(stored.t_plus, streamed.t_plus, delta=2e-6)

    def test_clamp_one(self):
        digits = quiet_materialize('F2', 1000)
        plain = solver.dimension_bounds(digits, 1)
        self.assertTrue(plain.t_plus > 1)
        clamped = solver.dimension_bounds(digits, 1, clamp_one=True)
        self.assertEqual(clamped.t_plus, 1.0)
        self.assertIn('clamped', clamped.plus_reason)
        self.assertEqual(clamped.t_minus, plain.t_minus)
        b = solver.dimension_bounds([1, 2], 1, clamp_one=True)
        self.assertEqual(b.t_plus, 1.0)

    def test_mu_subsystem_check(self):
        check = solver.mu_subsystem_check([1, 2], 0.562868)
        self.assertFalse(check.holds)
        self.assertTrue(1 < check.total < 2)
        check = solver.mu_subsystem_check([10, 11], 0.1472)
        self.assertFalse(check.holds)
        self.assertTrue(1 < check.total < 1.02)
        self.assertTrue(solver.mu_subsystem_check([2], 1).holds)

    def test_moran_check_attached(self):
        b = solver.dimension_bounds([1, 2], 2)
        self.assertIsNotNone(b.t_plus)
        self.assertFalse(b.moran.holds)
        expected = solver.mu_subsystem_check([1, 2], b.t_plus).total
        self.assertEqual(b.moran.total, expected)
        self.assertTrue(b.moran.total > 1)
        self.assertIsNone(solver.dimension_bounds([1, 2], 1).moran)
        b = solver.dimension_bounds([2], 3)
        self.assertTrue(b.moran.holds)
        self.assertEqual(b.moran.total, 1.0)

    def test_tail_estimate(self):
        tail = solver.tail_estimate(parse_alphabet('F3'), 1.0, 10)
        expected = math.pi**2/6 - math.fsum(1/b**2 for b in range(1, 11))
        self.assertAlmostEqual(tail, expected, places=12)
        tail = solver.tail_estimate(parse_alphabet('3N'), 1.0, 10)
        expected = (math.pi**2/6 - 1 - 1/4 - 1/9)/9
        self.assertAlmostEqual(tail, expected, places=12)
        self.assertEqual(solver.tail_estimate(parse_alphabet('{1,2}'), 1.0),
                         0.0)
        self.assertEqual(solver.tail_estimate(parse_alphabet('F3'), 0.5, 10),
                         float('inf'))

    def test_tail_attached(self):
        spec = parse_alphabet('3N')
        digits = quiet_materialize('3N', 30)
        b = solver.dimension_bounds(digits, 1, spec=spec, ceiling=30)
        self.assertTrue(b.tail > 0)
        self.assertIsNone(solver.dimension_bounds(digits, 1).tail)


class RenderingTest(unittest.TestCase):
    """Test suite for the cfdim.rendering module."""

    def test_examples(self):
        F = Fraction
        d = rendering.image_disk(Word([1]))
        self.assertEqual((d.center, d.radius), ((F(3, 4), 0), F(1, 4)))
        d = rendering.image_disk(Word([2]))
        self.assertEqual((d.center, d.radius), ((F(5, 12), 0), F(1, 12)))
        d = rendering.image_disk(Word())
        self.assertEqual((d.center, d.radius, d.depth), ((F(1, 2), 0),
                                                         F(1, 2), 0))

    def check_picture(self, digits, count):
        disks = rendering._disks(digits, 2)
        self.assertEqual(len(disks), count)
        first = [d for d in disks if d.depth == 1]
        second = [d for d in disks if d.depth == 2]
        whole = rendering.image_disk(Word())
        for d in first:
            self.assertTrue(rendering.contains(whole, d))
        for d in second:
            parent = rendering.image_disk(d.word[:1])
            self.assertTrue(rendering.contains(parent, d), d.word)
        for group in (first, second):
            for a, b in itertools.combinations(group, 2):
                self.assertTrue(rendering.disjoint(a, b), (a.word, b.word))

    def test_one_two(self):
        self.check_picture([1, 2], 6)

    def test_gaussian_picture(self):
        self.check_picture([G(1, 1), G(1, -1), G(2, 1), G(2, -1)], 20)

    def test_radius_bound(self):
        rng = random.Random(21)
        for _ in range(50):
            w = Word(G(rng.randint(1, 6)) for _ in range(rng.randint(1, 4)))
            d = rendering.image_disk(w)
            q = convergents.state_of(w).q_curr.re
            self.assertTrue(d.radius <= Fraction(1, 2*q*q))

    def test_svg(self):
        buf = io.StringIO()
        disks = rendering.render_svg([1, 2], 2, buf)
        text = buf.getvalue()
        self.assertEqual(len(disks), 6)
        self.assertEqual(text.count('<circle'), 7)
        self.assertIn('id="w_1_2"', text)
        again = io.StringIO()
        rendering.render_svg([1, 2], 2, again)
        self.assertEqual(again.getvalue(), text)
        single = io.StringIO()
        self.assertEqual(len(rendering.render_svg([3], 1, single)), 1)
        self.assertIn('id="w_1pi"', rendering.svg_text(
            [rendering.image_disk([G(1, 1)])]))

    def test_svg_limits(self):
        self.assertRaises(ValueError, rendering.render_svg, [1, 2], 3,
                          io.StringIO())
        self.assertRaises(ValueError, rendering.render_svg,
                          list(range(1, 200)), 2, io.StringIO())


class VerifyTest(unittest.TestCase):
    """Test suite for the cfdim.verify module."""

    def test_lemmas(self):
        report = verify.lemma_suite(seed=7, words=200)
        self.assertTrue(report.passed, report.failures[:3])
        self.assertEqual(report.checks, 200 + 400)

    def test_telescoping(self):
        for w in (Word([1]), Word([2, 5, 1]), Word([G(1, 1), 3])):
            for z in (0, 1, 0.5+0.5j):
                product = verify.telescoping_product(w, z)
                expected = distortion.derivative_modulus(w, z)**0.5
                self.assertAlmostEqual(product/expected, 1.0, places=12)

    def test_distortion_real(self):
        report = verify.distortion_suite((1, 2), k=5, samples=30, words=50)
        self.assertTrue(report.passed, report.failures[:3])

    def test_distortion_complex(self):
        report = verify.distortion_suite((G(1, 1), G(2), G(2, -1)), k=2,
                                         samples=40, words=30, seed=3)
        self.assertTrue(report.passed, report.failures[:3])

    def test_sandwich(self):
        report = verify.sandwich_suite()
        self.assertTrue(report.passed)
        self.assertEqual(report.checks, 12)

    def test_unknown_suite(self):
        self.assertRaises(ValueError, verify.run_suite, 'everything')


class TablesTest(unittest.TestCase):
    """Test suite for the cfdim.tables module."""

    def test_rows_parse(self):
        for rows in tables.TABLES.values():
            for row in rows:
                spec = parse_alphabet(row.alphabet)
                n = alphabet.cardinality(spec, row.ceiling, row.ceiling_mode)
                self.assertTrue(n >= 1)
                self.assertTrue(row.t_minus <= row.t_plus)
        flagged = [row.alphabet for rows in tables.TABLES.values()
                   for row in rows if row.flag_reason]
        self.assertEqual(flagged, ['{2..5}x{-8..8}i', '{2,3}x{-2..2}i',
                                   '{3,4,5}x{-8..8}i', '{100..104}'])

    def test_plan_k(self):
        self.assertEqual(tables.plan_k(2, 20, None), 20)
        self.assertEqual(tables.plan_k(2, 20, 1e-9), 1)
        self.assertEqual(tables.plan_k(4, 10, 600, threads=4), 10)

    def row(self, table_id, text):
        for row in tables.TABLES[table_id]:
            if row.alphabet == text:
                return row
        raise KeyError(text)

    def test_ten_eleven_row(self):
        result = tables.run_row(self.row(2, '{10,11}'))
        self.assertEqual(result.flag, 'ok')
        self.assertEqual(result.k, 16)
        self.assertTrue(abs(result.delta_minus) <= 5e-4)
        self.assertTrue(abs(result.delta_plus) <= 5e-4)

    def test_powers_of_two(self):
        result = tables.run_row(tables.TABLES[3][-1])
        self.assertAlmostEqual(result.t_minus, 0.23, delta=5e-3)
        self.assertAlmostEqual(result.t_plus, 0.23, delta=5e-3)

    def test_reduced_row(self):
        result = tables.run_row(self.row(2, '{2,3}'), budget=1e-3)
        self.assertTrue(result.k < 20)
        self.assertEqual(result.flag, 'reduced')

    def test_flagged_row(self):
        row = self.row(1, '{2,3}x{-2..2}i')
        result = tables.run_row(row, budget=1e-9)
        self.assertEqual(result.k, 1)
        self.assertEqual(result.flag, 'flagged')
        self.assertTrue(row.flag_reason)

    def test_csv(self):
        result = tables.run_row(self.row(1, '{10,11}x{10,11}i'))
        self.assertIn(result.flag, ('ok', 'deviates'))
        self.assertAlmostEqual(result.delta_minus,
                               result.t_minus - 0.255398, places=12)
        buf = io.StringIO()
        tables.write_csv([result], buf)
        lines = buf.getvalue().splitlines()
        self.assertEqual(lines[0],
                         'alphabet,ceiling,k,t_minus,t_plus,paper_t_minus,'
                         'paper_t_plus,delta_minus,delta_plus,flag')
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[1].endswith(result.flag))

    def test_unknown_table(self):
        self.assertRaises(ValueError, tables.run_table, 4)


class CommandLineTest(unittest.TestCase):
    """Test suite for the cfdim.cli module."""

    def run_cli(self, *argv):
        buf = io.StringIO()
        with warnings.catch_warnings(), mock.patch('sys.stderr', io.StringIO()):
            warnings.simplefilter('ignore', TruncationWarning)
            status = cli.main(list(argv) + ['--threads', '1'], out=buf)
        return status, buf.getvalue()

    def test_bounds_singleton(self):
        status, text = self.run_cli('bounds', '--alphabet', '{2}', '--k', '3',
                                    '--out', 'json')
        self.assertEqual(status, 0)
        record = cli.record_from_json(text.strip())
        self.assertEqual((record.t_minus, record.t_plus), (0.0, 0.0))
        self.assertEqual(record.convention, 'q^-2t')
        self.assertEqual(record.version, cfdim.__version__)
        self.assertIsNone(record.wall_time)

    def test_bounds_no_root(self):
        status, text = self.run_cli('bounds', '--alphabet', '{1,2}',
                                    '--k', '1')
        self.assertEqual(status, 2)
        self.assertIn('increase k', text)

    def test_bounds_bracket(self):
        status, text = self.run_cli('bounds', '--alphabet', '{2,3}',
                                    '--k', '12', '--out', 'json')
        self.assertEqual(status, 0)
        record = cli.record_from_json(text)
        self.assertTrue(record.t_minus < 0.3344 and record.t_plus > 0.3448)
        self.assertEqual(cli.record_from_json(cli.record_to_json(record)),
                         record)

    def test_divergent_tail_is_strict_json(self):
        status, text = self.run_cli('bounds', '--alphabet', '100N',
                                    '--ceiling', '50', '--ceiling-mode',
                                    'index', '--k', '1', '--out', 'json')
        self.assertEqual(status, 0)

        def reject(token):
            raise ValueError(token)

        fields = json.loads(text, parse_constant=reject)
        self.assertEqual(fields['tail'], 'inf')
        record = cli.record_from_json(text)
        self.assertEqual(record.tail, float('inf'))
        self.assertTrue(record.t_plus < 0.5)
        self.assertEqual(cli.record_to_json(record), text.strip())

    def test_deterministic_output(self):
        args = ('bounds', '--alphabet', '{2,3,5}', '--k', '6', '--out', 'json')
        self.assertEqual(self.run_cli(*args), self.run_cli(*args))

    def test_csv_and_timing(self):
        status, text = self.run_cli('bounds', '--alphabet', '{2,3}', '--k',
                                    '4', '--out', 'csv', '--timing')
        self.assertEqual(status, 0)
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(rows[0], list(cli.RunRecord._fields))
        record = dict(zip(rows[0], rows[1]))
        self.assertEqual(record['alphabet'], '{2,3}')
        self.assertNotEqual(record['wall_time'], '')

    def test_errors(self):
        status, text = self.run_cli('bounds', '--alphabet', '{0,1}',
                                    '--k', '2')
        self.assertEqual(status, 1)
        status, text = self.run_cli('bounds', '--alphabet', '2N', '--k', '2')
        self.assertEqual(status, 1)
        with mock.patch('sys.stderr', io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                cli.main(['bounds', '--alphabet', '{1,2}'])
        self.assertEqual(cm.exception.code, 1)

    def test_memory_cap_refusal(self):
        status, text = self.run_cli('bounds', '--alphabet', '{1,2}', '--k',
                                    '6', '--mode', 'stored')
        self.assertEqual(status, 0)
        with mock.patch.dict(os.environ, {'CFDIM_MEM_CAP': '10'}):
            status, text = self.run_cli('bounds', '--alphabet', '{1,2}',
                                        '--k', '6', '--mode', 'stored')
        self.assertEqual(status, 1)

    def test_sweep(self):
        status, text = self.run_cli('sweep', '--alphabet', '{2,3}',
                                    '--k-max', '5', '--out', 'json')
        self.assertEqual(status, 0)
        summary = json.loads(text)
        self.assertTrue(summary['minus_increasing'])
        self.assertTrue(summary['plus_decreasing'])
        self.assertEqual(len(summary['records']), 5)

    def test_verify(self):
        status, text = self.run_cli('verify', '--suite', 'sandwich')
        self.assertEqual(status, 0)
        self.assertIn('suite sandwich: passed', text)
        status, text = self.run_cli('verify', '--suite', 'distortion',
                                    '--alphabet', '{1,2}', '--k', '5',
                                    '--words', '20', '--samples', '20')
        self.assertEqual(status, 0)

    def test_render(self):
        with tempfile.TemporaryDirectory() as where:
            path = os.path.join(where, 'disks.svg')
            status, text = self.run_cli('render', '--alphabet', '{1,2}',
                                        '--depth', '2', '--out', path)
            self.assertEqual(status, 0)
            self.assertIn('nested: True', text)
            with open(path) as f:
                self.assertEqual(f.read().count('<circle'), 7)

    def test_ceiling_type(self):
        self.assertEqual(cli._ceiling('1e6'), 10**6)
        self.assertEqual(cli._ceiling('500000'), 500000)
        for text in ('0', '2.5', 'many'):
            self.assertRaises(argparse.ArgumentTypeError, cli._ceiling, text)


class ExpensiveTests(unittest.TestCase):
    """Test cases that consume a lot of CPU time.

    By default, these tests are not run. To run them, pass:

        --do-expensive-tests

    on the command line, or set CFDIM_EXPENSIVE_TESTS=1.
    """

    @skip_if_too_expensive
    def test_one_two_to_twenty(self):
        for k in range(13, 21):
            b = solver.dimension_bounds([1, 2], k, threads=4)
            self.assertTrue(b.t_minus < DIM_E12 < b.t_plus, k)
        self.assertAlmostEqual(b.t_minus, 0.52417, delta=2e-3)
        self.assertAlmostEqual(b.t_plus, 0.562868, delta=2e-3)
        single = solver.dimension_bounds([1, 2], 20)
        self.assertTrue(abs(single.t_minus - b.t_minus) <= 1e-9)
        self.assertTrue(abs(single.t_plus - b.t_plus) <= 1e-9)

    @skip_if_too_expensive
    def test_lemma_suite_full(self):
        report = verify.lemma_suite(seed=7)
        self.assertTrue(report.passed, report.failures[:3])

    @skip_if_too_expensive
    def test_infinite_rows(self):
        for table_id, text in ((2, '2N'), (2, '3N'), (3, 'F3'), (3, 'F5')):
            row = [r for r in tables.TABLES[table_id]
                   if r.alphabet == text][0]
            result = tables.run_row(row)
            self.assertTrue(abs(result.delta_minus) <= 5e-3, text)
            self.assertTrue(abs(result.delta_plus) <= 5e-3, text)

    @skip_if_too_expensive
    def test_f2_clamped(self):
        result = tables.run_row(tables.TABLES[3][0], clamp_one=True)
        self.assertEqual(result.t_plus, 1.0)
        self.assertTrue(abs(result.delta_minus) <= 5e-3)

    @skip_if_too_expensive
    def test_cli_cofinite(self):
        buf = io.StringIO()
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', TruncationWarning)
            status = cli.main(['bounds', '--alphabet', 'F3', '--ceiling',
                               '1000000', '--k', '1', '--out', 'json',
                               '--threads', '1'], out=buf)
        self.assertEqual(status, 0)
        record = cli.record_from_json(buf.getvalue())
        self.assertAlmostEqual(record.t_minus, 0.759746, delta=5e-3)
        self.assertAlmostEqual(record.t_plus, 0.841966, delta=5e-3)
        self.assertTrue(record.tail > 0)

    @skip_if_too_expensive
    def test_complex_table_row(self):
        result = tables.run_row(tables.TABLES[1][0])
        self.assertTrue(result.t_minus < result.t_plus)
        self.assertTrue(1 < result.t_minus < 2)
        self.assertEqual(result.flag, 'flagged')
        self.assertAlmostEqual(result.t_minus, 1.32819, delta=1e-3)


if __name__ == '__main__':
    if '--do-expensive-tests' in sys.argv:
        # By this point the functions to skip have all been decorated.
        # Remove it from sys.argv, otherwise unittest will complain.
        sys.argv.remove('--do-expensive-tests')
    unittest.main()
