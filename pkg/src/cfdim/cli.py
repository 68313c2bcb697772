# -*- coding: utf-8 -*-

##  Part of the cfdim package.
##
##  Copyright © 2026 the cfdim authors.
##  See the file __init__.py for the licence terms for this software.

"""\
======================
Command line interface
======================

Usage::

    cfdim bounds --alphabet "{2,3}" --k 12 [--out json]
    cfdim sweep --alphabet "{2,3}" --k-max 8
    cfdim table --id 2 [--budget 600] [--clamp-one]
    cfdim verify --suite lemmas|distortion|sandwich|all [--seed 7]
    cfdim render --alphabet "{1+i,1-i,2+i,2-i}" --depth 2 --out fig.svg

Exit status is 0 on success, 2 if a requested bound has no root, and 1
for usage errors, invalid alphabets, memory-cap refusals and failed
verification.

The results of ``bounds`` and ``sweep`` are RunRecords. Their JSON form
is a flat object with the fields of ``RunRecord`` and reads back
unchanged:

    >>> r = RunRecord._make(range(len(RunRecord._fields)))
    >>> record_from_json(record_to_json(r)) == r
    True

Timing is left out (``wall_time`` is null) unless ``--timing`` is given,
so repeated single-threaded runs print identical bytes.
"""

from __future__ import division

import argparse
import csv
import json
import logging
import math
import sys
from collections import namedtuple

from cfdim import __version__
from cfdim.alphabet import (AlphabetError, CEILING_MODES, alphabet_text,
                            load_alphabet, materialize, parse_alphabet)
from cfdim.enumeration import MemoryCapError
from cfdim.pressure import EXPONENT_CONVENTION
from cfdim.rendering import contains, disjoint, render_svg
from cfdim.solver import dimension_bounds, sweep
from cfdim.tables import run_table, write_csv
from cfdim.utilities import default_threads
from cfdim.verify import SUITES, run_suite


__all__ = ['RunRecord', 'build_parser', 'main', 'make_record',
           'record_from_json', 'record_to_json',
          ]

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NO_ROOT = 2


RunRecord = namedtuple('RunRecord',
                       'alphabet ceiling ceiling_mode k t_minus t_plus '
                       'minus_reason plus_reason tolerance term_count '
                       'threads mode wall_time tail version convention')


def make_record(spec, bounds, ceiling, ceiling_mode, threads, timing=False):
    """Build the RunRecord of one DimensionBounds."""
    if ceiling is None:
        ceiling = spec.ceiling
    return RunRecord(alphabet_text(spec), ceiling, ceiling_mode, bounds.k,
                     bounds.t_minus, bounds.t_plus, bounds.minus_reason,
                     bounds.plus_reason, bounds.tolerance, bounds.term_count,
                     threads, bounds.mode,
                     bounds.wall_time if timing else None, bounds.tail,
                     __version__, EXPONENT_CONVENTION)


def record_to_json(record):
    """Return one line of strict JSON; a divergent tail is written "inf"."""
    fields = record._asdict()
    if fields['tail'] == math.inf:
        fields['tail'] = 'inf'
    return json.dumps(fields, sort_keys=True, allow_nan=False)


def record_from_json(text):
    fields = json.loads(text)
    if fields.get('tail') == 'inf':
        fields['tail'] = math.inf
    return RunRecord(**fields)


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_records(records, fmt, out):
    if fmt == 'json':
        for record in records:
            out.write(record_to_json(record) + '\n')
    elif fmt == 'csv':
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(RunRecord._fields)
        for record in records:
            writer.writerow([_cell(x) for x in record])
    else:
        for record in records:
            out.write(_record_text(record))


def _bound_text(t, reason):
    if t is None:
        return reason
    if reason:
        return '%.10f (%s)' % (t, reason)
    return '%.10f' % t


def _record_text(record):
    lines = [
        ('alphabet', record.alphabet),
        ('ceiling', '-' if record.ceiling is None
         else '%d (%s)' % (record.ceiling, record.ceiling_mode)),
        ('k', record.k),
        ('T-', _bound_text(record.t_minus, record.minus_reason)),
        ('T+', _bound_text(record.t_plus, record.plus_reason)),
        ('tolerance', '%g' % record.tolerance),
        ('words', '%d (%s)' % (record.term_count, record.mode)),
        ]
    if record.tail is not None:
        lines.append(('tail', '%g' % record.tail))
    if record.wall_time is not None:
        lines.append(('wall time', '%.3fs' % record.wall_time))
    lines.append(('convention', record.convention))
    return ''.join('%-11s %s\n' % line for line in lines) + '\n'


# === Commands ===

def _spec(args):
    if args.alphabet_file is not None:
        return load_alphabet(args.alphabet_file, args.ceiling)
    return parse_alphabet(args.alphabet, args.ceiling)


def _digits(args):
    spec = _spec(args)
    return spec, materialize(spec, args.ceiling, args.ceiling_mode)


def _bounds_kwargs(args, spec):
    return dict(mode=args.mode, threads=args.threads,
                clamp_one=args.clamp_one, spec=spec, ceiling=args.ceiling,
                ceiling_mode=args.ceiling_mode)


def _any_absent(records):
    return any(r.t_minus is None or r.t_plus is None for r in records)


def cmd_bounds(args, out):
    spec, digits = _digits(args)
    bounds = dimension_bounds(digits, args.k, args.tol,
                              **_bounds_kwargs(args, spec))
    record = make_record(spec, bounds, args.ceiling, args.ceiling_mode,
                         args.threads, args.timing)
    _write_records([record], args.out, out)
    return EXIT_NO_ROOT if _any_absent([record]) else EXIT_OK


def cmd_sweep(args, out):
    spec, digits = _digits(args)
    result = sweep(digits, args.k_max, args.tol,
                   **_bounds_kwargs(args, spec))
    records = [make_record(spec, b, args.ceiling, args.ceiling_mode,
                           args.threads, args.timing)
               for b in result.bounds]
    if args.out == 'json':
        summary = dict(records=[r._asdict() for r in records],
                       minus_increasing=result.minus_increasing,
                       plus_decreasing=result.plus_decreasing,
                       violations=result.violations,
                       widths=result.widths,
                       rate_constant=result.rate_constant,
                       rate_residual=result.rate_residual,
                       caveats=result.caveats)
        out.write(json.dumps(summary, sort_keys=True) + '\n')
    else:
        _write_records(records, args.out, out)
        if args.out == 'text':
            out.write('T- increasing: %s\n' % result.minus_increasing)
            out.write('T+ decreasing: %s\n' % result.plus_decreasing)
            if result.rate_constant is not None:
                out.write('width ~ %.6g/k (rms residual %.3g)\n'
                          % (result.rate_constant, result.rate_residual))
            for caveat in result.caveats:
                out.write('note: %s\n' % caveat)
    return EXIT_NO_ROOT if _any_absent(records) else EXIT_OK


def cmd_table(args, out):
    results = run_table(args.id, args.budget, args.threads, args.mode,
                        clamp_one=args.clamp_one)
    write_csv(results, out)
    return EXIT_OK


def cmd_verify(args, out):
    options = {}
    if args.suite in ('distortion', 'all'):
        spec, digits = _digits(args)
        options = dict(digits=digits, k=args.k, samples=args.samples,
                       words=args.words)
    report = run_suite(args.suite, args.seed, **options)
    if args.out == 'json':
        out.write(json.dumps(report._asdict(), sort_keys=True) + '\n')
    else:
        out.write('suite %s: %s (%d checks)\n'
                  % (report.name, 'passed' if report.passed else 'FAILED',
                     report.checks))
        for failure in report.failures:
            out.write('failure: %s\n' % failure)
        for note in report.notes:
            out.write('note: %s\n' % note)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_render(args, out):
    spec, digits = _digits(args)
    disks = render_svg(digits, args.depth, args.path)
    first = [d for d in disks if d.depth == 1]
    parent = dict((d.word[0], d) for d in first)
    nested = all(contains(parent[d.word[0]], d)
                 for d in disks if d.depth == 2)
    separate = all(disjoint(a, b) for i, a in enumerate(first)
                   for b in first[i+1:])
    out.write('wrote %d disks to %s (nested: %s, disjoint: %s)\n'
              % (len(disks), args.path, nested, separate))
    return EXIT_OK if nested and separate else EXIT_FAILURE


# === Parsing ===

class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAILURE, '%s: error: %s\n' % (self.prog, message))


def _ceiling(text):
    """Parse a ceiling such as 1000000 or 1e6."""
    try:
        value = int(text)
    except ValueError:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError('invalid ceiling %r' % text)
    if value != int(value) or value < 1:
        raise argparse.ArgumentTypeError('ceiling must be a positive '
                                         'integer, got %r' % text)
    return int(value)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid integer %r' % text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be positive, got %r' % text)
    return value


def _add_alphabet(parser, required=True, default=None):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--alphabet', default=default,
                       help='alphabet text, e.g. "{1,2}", "2N", "F3" or '
                            '"{2..5}x{-8..8}i"')
    group.add_argument('--alphabet-file', metavar='PATH',
                       help='file with one digit per line')
    parser.add_argument('--ceiling', type=_ceiling,
                        help='truncation for infinite alphabets')
    parser.add_argument('--ceiling-mode', choices=CEILING_MODES,
                        default='value',
                        help='ceiling bounds digit values or the digit count')


def _add_solver(parser):
    parser.add_argument('--tol', type=float,
                        help='bisection tolerance in t (default 1e-10 '
                             'stored, 1e-6 streamed)')
    parser.add_argument('--mode', choices=('auto', 'stored', 'streamed'),
                        default='auto')
    parser.add_argument('--clamp-one', action='store_true',
                        help='clamp T+ to the ambient dimension')
    parser.add_argument('--out', choices=('text', 'json', 'csv'),
                        default='text')
    parser.add_argument('--timing', action='store_true',
                        help='include wall-clock times in the output')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-vv for debugging)')
    common.add_argument('--threads', type=_positive_int,
                        default=default_threads(),
                        help='worker processes (default: all CPUs)')
    parser = _Parser(prog='cfdim',
                     description='Bounds on the Hausdorff dimension of '
                                 'continued fraction sets.')
    parser.add_argument('-V', '--version', action='version',
                        version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command_name', metavar='command')
    commands.required = True

    p = commands.add_parser('bounds', parents=[common],
                            help='compute T_k^- and T_k^+')
    _add_alphabet(p)
    p.add_argument('--k', type=_positive_int, required=True)
    _add_solver(p)
    p.set_defaults(command=cmd_bounds)

    p = commands.add_parser('sweep', parents=[common],
                            help='bounds for k = 1..k-max')
    _add_alphabet(p)
    p.add_argument('--k-max', type=int, required=True)
    _add_solver(p)
    p.set_defaults(command=cmd_sweep)

    p = commands.add_parser('table', parents=[common],
                            help='recompute a reference table')
    p.add_argument('--id', type=int, choices=(1, 2, 3), required=True)
    p.add_argument('--budget', type=float, default=600.0,
                   help='seconds per row used to choose k')
    p.add_argument('--mode', choices=('auto', 'stored', 'streamed'),
                   default='auto')
    p.add_argument('--clamp-one', action='store_true',
                   help='clamp T+ to 1 on the rows that call for it')
    p.set_defaults(command=cmd_table)

    p = commands.add_parser('verify', parents=[common],
                            help='run verification suites')
    p.add_argument('--suite', choices=SUITES + ('all',), default='all')
    p.add_argument('--seed', type=int, default=0)
    _add_alphabet(p, required=False, default='{1,2}')
    p.add_argument('--k', type=_positive_int, default=5)
    p.add_argument('--samples', type=_positive_int, default=50)
    p.add_argument('--words', type=_positive_int, default=200)
    p.add_argument('--out', choices=('text', 'json'), default='text')
    p.set_defaults(command=cmd_verify)

    p = commands.add_parser('render', parents=[common],
                            help='draw disk images as SVG')
    _add_alphabet(p)
    p.add_argument('--depth', type=int, choices=(1, 2), default=2)
    p.add_argument('--out', dest='path', required=True, metavar='PATH')
    p.set_defaults(command=cmd_render)
    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(asctime)s %(name)s %(levelname)s: '
                               '%(message)s')


def main(argv=None, out=None):
    """Run the command line; returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if out is None:
        out = sys.stdout
    try:
        return args.command(args, out)
    except (AlphabetError, MemoryCapError) as err:
        sys.stderr.write('cfdim: %s\n' % err)
        return EXIT_FAILURE
    except (ValueError, OSError) as err:
        _logger.debug('command failed', exc_info=True)
        sys.stderr.write('cfdim: error: %s\n' % err)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
