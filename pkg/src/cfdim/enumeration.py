# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
=====================
Word-tree enumeration
=====================

The pressure sums run over every word of length k on the alphabet, which
is (#I)**k words. This module walks that tree depth first, carrying the
exact convergent recurrence down each branch, and emits for each leaf the
two logarithms the pressure needs:

    log_q   = ln|q_w|
    log_1pa = ln|1 + a_w| = ln(|q_w + p_w|/|q_w|)

The ratio in log_1pa is formed from exact integers before the logarithm
is taken.

    >>> from cfdim.gaussian import GaussianInt
    >>> digits = [GaussianInt(1), GaussianInt(2)]
    >>> weights = enumerate_weights(digits, 2)
    >>> weights.count
    4
    >>> [round(math.exp(t.log_q), 9) for t in weights.terms()]
    [2.0, 3.0, 3.0, 5.0]

Words are visited in lexicographic order of the digit list. Two modes
exist:

    stored:
        all terms are kept in two numpy arrays; each pressure evaluation
        is then a vectorised scan. Limited by ``memory_cap()``.

    streamed:
        nothing is kept; every pass over the terms re-walks the tree,
        shard by shard, optionally in worker processes.

``mode='auto'`` picks stored when the term count fits under the cap.
"""

from __future__ import division

import logging
import math
from array import array
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from cfdim.convergents import EMPTY_STATE, Word, extend
from cfdim.gaussian import GaussianInt, gi_log_modulus
from cfdim.utilities import log_int, memory_cap


__all__ = ['MemoryCapError', 'StoredWeights', 'StreamedWeights', 'Subtree',
           'WeightTerm', 'enumerate_weights', 'iter_states',
           'partition_tree', 'weight_term',
          ]

_logger = logging.getLogger(__name__)

# Terms per chunk handed to a reducer when streaming.
CHUNK = 2**18

# Refuse trees with more words than this in any mode.
MAX_WORDS = 2**62


class MemoryCapError(ValueError):
    """Raised when stored enumeration would exceed the memory cap."""
    pass


WeightTerm = namedtuple('WeightTerm', 'log_q log_1pa')

# ``prefixes`` is a tuple of digit-index tuples. The empty prefix stands
# for the whole tree.
Subtree = namedtuple('Subtree', 'prefixes')


def _log_ratio(num, den):
    # ln(num/den) for positive ints; num - den is exact.
    return math.log1p((num - den)/den)


def weight_term(state):
    """Return the WeightTerm of a ConvergentState, from first principles."""
    q, p = state.q_curr, state.p_curr
    return WeightTerm(gi_log_modulus(q),
                      0.5*_log_ratio((q + p).norm(), q.norm()))


def word_count(digits, k):
    if k < 1:
        raise ValueError('word length k must be positive, got %r' % k)
    if not digits:
        raise ValueError('empty alphabet')
    count = len(digits)**k
    if count > MAX_WORDS:
        raise ValueError('(#I)**k = %d**%d words cannot be enumerated'
                         % (len(digits), k))
    return count


def partition_tree(digits, k, shards):
    """Split the words of length k into at most ``shards`` subtrees.

    First-level prefixes are used, or first-two-level prefixes when there
    are fewer digits than shards. Prefixes are grouped contiguously, so
    walking the shards in order visits words in lexicographic order.

    >>> partition_tree([1, 2], 20, 2)
    [Subtree(prefixes=((0,),)), Subtree(prefixes=((1,),))]
    >>> partition_tree([1, 2], 20, 1)
    [Subtree(prefixes=((),))]
    >>> [len(s.prefixes) for s in partition_tree(range(68), 3, 8)]
    [9, 9, 9, 9, 8, 8, 8, 8]

    """
    if shards < 1:
        raise ValueError('shards must be at least 1, got %r' % shards)
    n = len(digits)
    word_count(range(n), k)
    if shards == 1:
        return [Subtree(((),))]
    if n >= shards or k == 1:
        prefixes = [(i,) for i in range(n)]
    else:
        prefixes = [(i, j) for i in range(n) for j in range(n)]
    groups = min(shards, len(prefixes))
    size, extra = divmod(len(prefixes), groups)
    result = []
    start = 0
    for g in range(groups):
        stop = start + size + (1 if g < extra else 0)
        result.append(Subtree(tuple(prefixes[start:stop])))
        start = stop
    assert start == len(prefixes)
    return result


def iter_states(digits, k):
    """Yield ``(word, ConvergentState)`` for every word of length k.

    This is the slow, general walk built on ``convergents.extend``; it is
    used for verification and small trees.
    """
    digits = [GaussianInt.coerce(b) for b in digits]
    word_count(digits, k)
    stack = [((), EMPTY_STATE)]
    while stack:
        word, state = stack.pop()
        if len(word) == k:
            yield Word(word), state
            continue
        for b in reversed(digits):
            stack.append((word + (b,), extend(state, b)))


# === Fast kernels ===
#
# Digits travel to the kernels as plain ints (real alphabets) or as
# (re, im) pairs, so that worker processes receive cheap picklable data
# and the inner loops avoid GaussianInt objects.

def _raw_digits(digits):
    digits = [GaussianInt.coerce(b) for b in digits]
    if all(b.is_real() for b in digits):
        return True, tuple(b.re for b in digits)
    return False, tuple((b.re, b.im) for b in digits)


def _real_state(raw, prefix):
    qp, qc, pp, pc = 0, 1, 1, 0
    for i in prefix:
        b = raw[i]
        qp, qc, pp, pc = qc, b*qc + qp, pc, b*pc + pp
    return qp, qc, pp, pc


def _walk_real(raw, k, subtree, chunk):
    logq = array('d')
    log1pa = array('d')
    backwards = raw[::-1]
    for prefix in subtree.prefixes:
        qp, qc, pp, pc = _real_state(raw, prefix)
        depth = k - len(prefix)
        if depth == 0:
            logq.append(log_int(qc))
            log1pa.append(_log_ratio(qc + pc, qc))
            continue
        stack = [(qp, qc, pp, pc, depth)]
        while stack:
            qp, qc, pp, pc, d = stack.pop()
            if d == 1:
                for b in raw:
                    q = b*qc + qp
                    logq.append(log_int(q))
                    log1pa.append(_log_ratio(q + b*pc + pp, q))
                if len(logq) >= chunk:
                    yield logq, log1pa
                    logq = array('d')
                    log1pa = array('d')
            else:
                d -= 1
                for b in backwards:
                    stack.append((qc, b*qc + qp, pc, b*pc + pp, d))
    if logq:
        yield logq, log1pa


def _gaussian_state(raw, prefix):
    state = (0, 0, 1, 0, 1, 0, 0, 0)
    for i in prefix:
        state = _gaussian_step(raw[i], state)
    return state


def _gaussian_step(digit, state):
    br, bi = digit
    qpr, qpi, qcr, qci, ppr, ppi, pcr, pci = state
    return (qcr, qci,
            br*qcr - bi*qci + qpr, br*qci + bi*qcr + qpi,
            pcr, pci,
            br*pcr - bi*pci + ppr, br*pci + bi*pcr + ppi)


def _gaussian_leaf(qr, qi, pr, pi):
    nq = qr*qr + qi*qi
    sr, si = qr + pr, qi + pi
    return 0.5*log_int(nq), 0.5*_log_ratio(sr*sr + si*si, nq)


def _walk_gaussian(raw, k, subtree, chunk):
    logq = array('d')
    log1pa = array('d')
    backwards = raw[::-1]
    for prefix in subtree.prefixes:
        state = _gaussian_state(raw, prefix)
        depth = k - len(prefix)
        if depth == 0:
            lq, la = _gaussian_leaf(state[2], state[3], state[6], state[7])
            logq.append(lq)
            log1pa.append(la)
            continue
        stack = [(state, depth)]
        while stack:
            state, d = stack.pop()
            if d == 1:
                qpr, qpi, qcr, qci, ppr, ppi, pcr, pci = state
                for br, bi in raw:
                    lq, la = _gaussian_leaf(
                        br*qcr - bi*qci + qpr, br*qci + bi*qcr + qpi,
                        br*pcr - bi*pci + ppr, br*pci + bi*pcr + ppi)
                    logq.append(lq)
                    log1pa.append(la)
                if len(logq) >= chunk:
                    yield logq, log1pa
                    logq = array('d')
                    log1pa = array('d')
            else:
                d -= 1
                for b in backwards:
                    stack.append((_gaussian_step(b, state), d))
    if logq:
        yield logq, log1pa


def _walk(real, raw, k, subtree, chunk=CHUNK):
    """Yield (log_q, log_1pa) numpy chunks for the words of subtree."""
    walker = _walk_real if real else _walk_gaussian
    for logq, log1pa in walker(raw, k, subtree, chunk):
        yield (np.frombuffer(logq, dtype=np.float64),
               np.frombuffer(log1pa, dtype=np.float64))


def _stored_shard(real, raw, k, subtree):
    parts = list(_walk(real, raw, k, subtree))
    if not parts:
        return np.empty(0), np.empty(0)
    return (np.concatenate([p[0] for p in parts]),
            np.concatenate([p[1] for p in parts]))


def _streamed_shard(real, raw, k, subtree, func, args):
    return [func(logq, log1pa, *args)
            for logq, log1pa in _walk(real, raw, k, subtree)]


# === Weight sets ===

class StoredWeights(object):
    """All weight terms of I**k held in two float64 arrays."""

    mode = 'stored'

    def __init__(self, digits, k, log_q, log_1pa):
        if len(log_q) != len(log_1pa):
            raise ValueError('weight arrays differ in length')
        self.digits = tuple(digits)
        self.k = k
        self.log_q = log_q
        self.log_1pa = log_1pa

    @property
    def count(self):
        return len(self.log_q)

    def terms(self):
        """Iterate over WeightTerms in enumeration order."""
        for lq, la in zip(self.log_q.tolist(), self.log_1pa.tolist()):
            yield WeightTerm(lq, la)

    def map_chunks(self, func, *args):
        """Return ``[func(log_q, log_1pa, *args)]`` over the stored terms."""
        return [func(self.log_q, self.log_1pa, *args)]

    def close(self):
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()
        return False


class StreamedWeights(object):
    """A re-runnable description of the walk over I**k.

    Every call to ``map_chunks`` walks the tree again. With more than one
    thread the shards are walked in worker processes; results always come
    back in shard order, so reductions are reproducible.
    """

    mode = 'streamed'

    def __init__(self, digits, k, shards=None, threads=1):
        self.digits = tuple(GaussianInt.coerce(b) for b in digits)
        self.k = k
        self.threads = max(1, threads)
        if shards is None:
            shards = self.threads
        self.subtrees = partition_tree(self.digits, k, shards)
        self._real, self._raw = _raw_digits(self.digits)
        self._count = word_count(self.digits, k)
        self._executor = None

    @property
    def count(self):
        return self._count

    def terms(self):
        for subtree in self.subtrees:
            for logq, log1pa in _walk(self._real, self._raw, self.k, subtree):
                for lq, la in zip(logq.tolist(), log1pa.tolist()):
                    yield WeightTerm(lq, la)

    def map_chunks(self, func, *args):
        """Return ``func(log_q, log_1pa, *args)`` for every chunk, in order.

        ``func`` must be a module-level function when threads > 1.
        """
        jobs = [(self._real, self._raw, self.k, subtree, func, args)
                for subtree in self.subtrees]
        if self.threads == 1 or len(jobs) == 1:
            results = [_streamed_shard(*job) for job in jobs]
        else:
            if self._executor is None:
                self._executor = ProcessPoolExecutor(max_workers=self.threads)
            futures = [self._executor.submit(_streamed_shard, *job)
                       for job in jobs]
            results = [f.result() for f in futures]
        return [r for shard in results for r in shard]

    def close(self):
        if self._executor is not None:
            self._executor.shutdown()
            self._executor = None

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()
        return False


def enumerate_weights(digits, k, mode='auto', threads=1, shards=None,
                      mem_cap=None):
    """Enumerate the weight terms of every word of length k.

    ``digits`` is a materialized alphabet. ``mode`` is 'stored',
    'streamed' or 'auto'. In stored mode with threads > 1 the shards are
    enumerated in worker processes and concatenated in order, giving
    arrays identical to a single-threaded run.

    >>> w = enumerate_weights([7], 1)
    >>> [round(math.exp(x), 12) for x in (w.log_q[0], w.log_1pa[0])]
    [7.0, 1.142857142857]

    """
    if mode not in ('auto', 'stored', 'streamed'):
        raise ValueError('mode must be auto, stored or streamed, got %r'
                         % (mode,))
    digits = [GaussianInt.coerce(b) for b in digits]
    if any(b.re < 1 for b in digits):
        raise ValueError('digits must have positive real part')
    count = word_count(digits, k)
    threads = max(1, threads)
    if mem_cap is None:
        mem_cap = memory_cap()
    if mode == 'auto':
        mode = 'stored' if count <= mem_cap else 'streamed'
    if mode == 'streamed':
        _logger.info('streaming %d words (#I=%d, k=%d)', count,
                     len(digits), k)
        return StreamedWeights(digits, k, shards, threads)
    if count > mem_cap:
        raise MemoryCapError('%d words exceed the stored-weights cap of %d; '
                             'use streamed mode or raise CFDIM_MEM_CAP'
                             % (count, mem_cap))
    if shards is None:
        shards = threads
    subtrees = partition_tree(digits, k, shards)
    real, raw = _raw_digits(digits)
    _logger.info('enumerating %d words (#I=%d, k=%d) in %d shard(s)',
                 count, len(digits), k, len(subtrees))
    if threads == 1 or len(subtrees) == 1:
        parts = [_stored_shard(real, raw, k, s) for s in subtrees]
    else:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(_stored_shard, real, raw, k, s)
                       for s in subtrees]
            parts = [f.result() for f in futures]
    log_q = np.concatenate([p[0] for p in parts])
    log_1pa = np.concatenate([p[1] for p in parts])
    assert len(log_q) == count
    return StoredWeights(digits, k, log_q, log_1pa)
