#!/usr/bin/env python
# coding:utf-8

"""command line interface: count, seq, verify, render, bfile, families"""

import argparse
import json
import logging
import os
import sys

from prettytable import PrettyTable

from tilecount import TilecountError, __version__
from tilecount import count2d, identities, lex, regions2d, sequences, solid3d

logger = logging.getLogger(__name__)

FORMAT = "%(asctime)-15s | %(levelname)-8s | %(message)s"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# region spec tokens, e.g. `rect:3,4`, `l3:2,2,NW`, `prism:@l.txt,5`
tokens = ('FILE', 'NAME', 'INT', 'COLON', 'COMMA', 'WHITESPACE')

t_FILE = r'@[^,\s]+'
t_NAME = r'[A-Za-z][A-Za-z0-9]*'
t_COLON = r':'
t_COMMA = r','

def t_INT(t):
    r'[0-9]+'
    t.value = int(t.value)
    return t

def t_WHITESPACE(t):
    r'\s+'
    t.skip = True
    return t

lexer = lex.lex()

# builder name -> (argument kinds, optional argument kinds, builder)
__BUILDERS__ = {
    'rect': (('INT', 'INT'), (), regions2d.rect),
    'a': (('INT',), (), regions2d.a_grid),
    'b': (('INT',), (), regions2d.b_grid),
    'c': (('INT',), (), regions2d.c_grid),
    'l2': (('INT', 'INT'), (), regions2d.l2_region),
    'l3': (('INT', 'INT'), ('NAME',), regions2d.l3_region),
    'tower': (('INT',), (), solid3d.tower),
    'mtower': (('INT',), (), solid3d.m_tower),
    'prism': (('FILE', 'INT'),  (),
        lambda section, n: solid3d.Prism3D(section, n)),
}

def read_region(path):
    """a Region2D from an ASCII region file"""
    try:
        with open(path, 'r') as f:
            return regions2d.from_ascii(f.read())
    except OSError as e:
        raise lex.SpecError('cannot read region file `%s`: %s' % \
            (path, e.strerror or e))

def parse_region_spec(text):
    """
    Parse a region spec into a Region2D or a Prism3D.

    spec  : FILE | NAME COLON items
    items : item | item COMMA items
    item  : INT | NAME | FILE
    """
    found = lexer.tokenize(text)
    if not found:
        raise lex.SpecError('empty region spec')
    if len(found) == 1 and found[0].lexical_unit() == 'FILE':
        return read_region(found[0].value[1:])
    head = found[0]
    if head.lexical_unit() != 'NAME' or len(found) < 3 or \
            found[1].lexical_unit() != 'COLON':
        raise lex.SpecError('expected `builder:args` or `@file`, got `%s`' % \
            text)
    name = head.value
    if name not in __BUILDERS__:
        raise lex.SpecError('unknown builder `%s`, expected one of %s' % \
            (name, ', '.join(sorted(__BUILDERS__))))
    items = found[2:]
    if any(t.lexical_unit() != 'COMMA' for t in items[1::2]) or \
            len(items) % 2 == 0:
        raise lex.SpecError('arguments of `%s` must be separated by commas' % \
            name)
    items = items[0::2]
    required, optional, builder = __BUILDERS__[name]
    kinds = tuple(t.lexical_unit() for t in items)
    if kinds != required and kinds != required + optional:
        raise lex.SpecError('`%s` takes %s, got %s' % (name,
            ','.join(required + tuple('[%s]' % o for o in optional)),
            ','.join(kinds)))
    args = [read_region(t.value[1:]) if t.lexical_unit() == 'FILE'
        else t.value for t in items]
    return builder(*args)

def cmd_count(args):
    """print the exact number of tilings of a region or prism"""
    target = parse_region_spec(args.spec)
    if isinstance(target, solid3d.Prism3D):
        count = solid3d.count_bricks(target)
    else:
        count = count2d.count_tilings(target)
    if args.json:
        print(json.dumps({'spec': args.spec, 'cells': len(target),
            'count': str(count)}))
    else:
        print(count)
    return EXIT_OK

def cmd_seq(args):
    """print a range of one family, one `n<TAB>value` line per index"""
    family = sequences.family(args.family)
    if args.method not in family.methods():
        raise sequences.RecurrenceError(
            'family %s does not support method `%s`' % \
            (family.token, args.method))
    if args.last < args.first:
        raise sequences.RecurrenceError('empty range %d..%d' % \
            (args.first, args.last))
    values = family.values(args.first, args.last, args.method)
    indices = range(args.first, args.last + 1)
    if args.json:
        for n, value in zip(indices, values):
            print(json.dumps({'family': family.token, 'n': n,
                'method': args.method, 'value': str(value)}))
    elif args.table:
        table = PrettyTable(['n', family.token])
        table.align[family.token] = 'r'
        for n, value in zip(indices, values):
            table.add_row([n, value])
        print(table)
    else:
        for n, value in zip(indices, values):
            print('%d\t%d' % (n, value))
    return EXIT_OK

def _suite_bounds(args):
    bounds = {}
    if args.suite in ('thm21', 'tauraso'):
        for key, value in (('max_n', args.max_n), ('max_k', args.max_k)):
            value = value if value is not None else args.max
            if value is not None:
                bounds[key] = value
        if args.suite == 'tauraso' and args.diag_max is not None:
            bounds['diag_max'] = args.diag_max
    elif args.max is not None:
        bounds['max_n'] = args.max
    return bounds

def cmd_verify(args):
    """run a verification suite; exit 1 when any check fails"""
    bounds = _suite_bounds(args)
    if args.suite == 'all' and (bounds or args.diag_max is not None):
        logger.warning('bounds are ignored by `verify all`')
        bounds = {}
    report = identities.run_suite(args.suite, **bounds)
    if args.json:
        print(report.to_json_lines())
    else:
        print(report.to_text(verbose=args.verbose))
    return EXIT_OK if report.ok() else EXIT_FAILED

def cmd_render(args):
    """draw the first tilings of a two dimensional region"""
    target = parse_region_spec(args.spec)
    if not isinstance(target, regions2d.Region2D):
        raise lex.SpecError('render needs a two dimensional region, ' + \
            'got `%s`' % args.spec)
    tilings = count2d.enumerate_tilings(target, args.limit)
    total = count2d.count_tilings(target)
    print('# %s: showing %d of %d tilings' % \
        (args.spec, len(tilings), total))
    for number, tiling in enumerate(tilings, 1):
        print('')
        print('# tiling %d' % number)
        print(count2d.render_tiling_ascii(tiling))
    return EXIT_OK

def read_bfile(path):
    """(n, a(n)) pairs of a b-file; blank lines and `#` comments skipped"""
    pairs = []
    try:
        with open(path, 'r') as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise lex.SpecError('cannot read b-file `%s`: %s' % \
            (path, e.strerror or e))
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        try:
            if len(fields) != 2:
                raise ValueError(line)
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise lex.SpecError('line %d of `%s` is not `n a(n)`: %s' % \
                (lineno, path, line))
    return pairs

def cmd_bfile(args):
    """print a b-file, or compare a family with a user-supplied one"""
    family = sequences.family(args.family)
    if args.check:
        pairs = read_bfile(args.check)
        for n, value in pairs:
            expected = family.term(n)
            if expected != value:
                print('mismatch at n=%d: file has %d, %s has %d' % \
                    (n, value, family.token, expected))
                return EXIT_FAILED
        print('%d terms of %s match %s' % \
            (len(pairs), args.check, family.token))
        return EXIT_OK
    if args.to < family.start:
        raise sequences.RecurrenceError(
            '%s starts at n=%d, cannot stop at %d' % \
            (family.token, family.start, args.to))
    values = family.values(family.start, args.to)
    for n, value in zip(range(family.start, args.to + 1), values):
        print('%d %d' % (n, value))
    return EXIT_OK

def cmd_families(args):
    """list the sequence families"""
    table = PrettyTable(['token', 'name', 'start', 'recurrence',
        'closed form', 'OEIS', 'counts'])
    table.align['counts'] = 'l'
    for family in sequences.catalog():
        table.add_row([family.token, family.name, family.start,
            ', '.join(str(c) for c in family.coeffs),
            'yes' if family.closed is not None else 'no',
            family.oeis or '-', family.description])
    print(table)
    return EXIT_OK

def build_parser():
    """the argparse parser of every subcommand"""
    parser = argparse.ArgumentParser(prog='tilecount',
        description='exact domino and brick tiling counts')
    parser.add_argument('--version', action='version',
        version='%(prog)s ' + __version__)
    parser.add_argument('--log-level', default=None,
        help='DEBUG, INFO, WARNING (default) or ERROR; ' + \
            'also read from TILECOUNT_LOG_LEVEL')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    count = commands.add_parser('count', help=cmd_count.__doc__)
    count.add_argument('spec', help='region spec or @file')
    count.add_argument('--json', action='store_true')
    count.set_defaults(func=cmd_count)

    seq = commands.add_parser('seq', help=cmd_seq.__doc__)
    seq.add_argument('family', help='F A B C T M L3 L2D')
    seq.add_argument('first', metavar='FROM', type=int)
    seq.add_argument('last', metavar='TO', type=int)
    seq.add_argument('--method', choices=sequences.METHODS, default='iter')
    output = seq.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true')
    output.add_argument('--table', action='store_true')
    seq.set_defaults(func=cmd_seq)

    verify = commands.add_parser('verify', help=cmd_verify.__doc__)
    verify.add_argument('suite', choices=identities.SUITES + ('all',))
    verify.add_argument('--max', type=int, default=None)
    verify.add_argument('--max-n', type=int, default=None)
    verify.add_argument('--max-k', type=int, default=None)
    verify.add_argument('--diag-max', type=int, default=None)
    verify.add_argument('--json', action='store_true')
    verify.add_argument('--verbose', action='store_true',
        help='list passing checks too')
    verify.set_defaults(func=cmd_verify)

    render = commands.add_parser('render', help=cmd_render.__doc__)
    render.add_argument('spec', help='region spec or @file')
    render.add_argument('--limit', type=int, default=10)
    render.set_defaults(func=cmd_render)

    bfile = commands.add_parser('bfile', help=cmd_bfile.__doc__)
    bfile.add_argument('family', help='F A B C T M L3 L2D')
    bfile.add_argument('--to', type=int, default=100)
    bfile.add_argument('--check', metavar='FILE', default=None,
        help='compare against a b-file instead of printing one')
    bfile.set_defaults(func=cmd_bfile)

    families = commands.add_parser('families', help=cmd_families.__doc__)
    families.set_defaults(func=cmd_families)
    return parser

def main(argv=None):
    """entry point; returns the exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    level_name = (args.log_level or \
        os.environ.get('TILECOUNT_LOG_LEVEL') or 'WARNING').upper()
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        parser.error('unknown log level `%s`' % level_name)
    logging.basicConfig(format=FORMAT, level=level)
    logging.getLogger('tilecount').setLevel(level)
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)
    try:
        return args.func(args)
    except (TilecountError, ValueError) as e:
        logger.debug('command failed', exc_info=True)
        sys.stderr.write('tilecount: error: %s\n' % e)
        return EXIT_USAGE

if __name__ == '__main__':
    sys.exit(main())
