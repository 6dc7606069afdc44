#!/usr/bin/env python
# coding:utf-8

"""verification of the tiling identities and tables against exact counts"""

import json
import logging
from dataclasses import dataclass

from prettytable import PrettyTable

from tilecount import count2d, regions2d, solid3d
from tilecount.sequences import (catalog, closed_eval, l2, l3,
    rec_eval_iter, rec_eval_matpow)

logger = logging.getLogger(__name__)

# n -> (A_n, B_n, C_n, L3(2n, 2n)) as published
TABLE1 = {
    1: (3, 4, 7, 11),
    2: (11, 15, 26, 153),
    3: (41, 56, 97, 2131),
    4: (153, 209, 362, 29681),
    5: (571, 780, 1351, 413403),
    6: (2131, 2911, 5042, 5757961),
    7: (7953, 10864, 18817, 80198051),
    8: (29681, 40545, 70226, 1117014753),
    9: (110771, 151316, 262087, 15558008491),
    10: (413403, 564719, 978122, 216695104121),
}

# n -> T_n as published
TABLE2 = {
    1: 2, 2: 9, 3: 32, 4: 121, 5: 450,
    6: 1681, 7: 6272, 8: 23409, 9: 87362, 10: 326041,
}

SUITES = ('table1', 'table2', 'thm21', 'crux', 'thm32', 'tauraso',
    'recurrences', 'charpoly', 'evaluators')

@dataclass(frozen=True)
class CheckResult:
    """one equality between two exact values"""
    name: str
    params: tuple
    left: int
    right: int

    @property
    def passed(self):
        return self.left == self.right

    def record(self):
        """the machine form: integers as decimal strings"""
        return {
            'name': self.name,
            'params': list(self.params),
            'left': str(self.left),
            'right': str(self.right),
            'pass': self.passed,
        }

class Report:
    """checks sorted by (name, params), with summary counts"""
    def __init__(self, results=()):
        self.__results__ = tuple(sorted(results,
            key=lambda r: (r.name, r.params)))
    def __len__(self):
        return len(self.__results__)
    def __iter__(self):
        return iter(self.__results__)
    def __eq__(self, other):
        return isinstance(other, Report) and \
            self.__results__ == other.__results__
    def __ne__(self, other):
        return not self.__eq__(other)
    def results(self):
        """getter : tuple of CheckResult"""
        return self.__results__
    def failures(self):
        """the checks that did not hold"""
        return [r for r in self.__results__ if not r.passed]
    def ok(self):
        """whether every check passed"""
        return not self.failures()
    def summary(self):
        """(total, passed, failed)"""
        failed = len(self.failures())
        return len(self), len(self) - failed, failed
    @staticmethod
    def merge(*reports):
        """one report holding the checks of all `reports`"""
        return Report(r for report in reports for r in report)
    def to_text(self, verbose=False):
        """a per-check table, the failures with both witnesses, a summary"""
        table = PrettyTable(['check', 'total', 'passed', 'failed'])
        table.align['check'] = 'l'
        groups = {}
        for result in self.__results__:
            tally = groups.setdefault(result.name, [0, 0])
            tally[0 if result.passed else 1] += 1
        for name in sorted(groups):
            good, bad = groups[name]
            table.add_row([name, good + bad, good, bad])
        lines = [table.get_string()]
        shown = self.__results__ if verbose else self.failures()
        for result in shown:
            lines.append('%s %s %s: %s %s %s' % \
                ('PASS' if result.passed else 'FAIL', result.name,
                 tuple(result.params), result.left,
                 '==' if result.passed else '!=', result.right))
        lines.append('%d checks, %d passed, %d failed' % self.summary())
        return '\n'.join(lines)
    def to_json_lines(self):
        """one JSON object per check, in report order"""
        return '\n'.join(json.dumps(r.record()) for r in self.__results__)

def _bounded(name, value, least, most=None):
    if not isinstance(value, int) or value < least or \
            (most is not None and value > most):
        top = '' if most is None else ' and <= %d' % most
        raise ValueError('%s must be an integer >= %d%s, got %r' % \
            (name, least, top, value))

def verify_table1(max_n=10, max_dp_l3=6):
    """
    Every published A, B, C and L3 value by recurrence, closed form and tiling
    count (the L3 column only up to `max_dp_l3`).
    """
    _bounded('max_n', max_n, 1, 10)
    families = catalog()
    columns = (
        ('A', families.A, regions2d.a_grid),
        ('B', families.B, regions2d.b_grid),
        ('C', families.C, regions2d.c_grid),
        ('L3', families.L3diag, lambda n: regions2d.l3_region(n, n)),
    )
    results = []
    for n in range(1, max_n + 1):
        for position, (label, fam, builder) in enumerate(columns):
            published = TABLE1[n][position]
            name = 'table1.%s' % label
            results.append(CheckResult(name + '.recurrence', (n,),
                rec_eval_iter(fam.recurrence, n), published))
            results.append(CheckResult(name + '.closed', (n,),
                closed_eval(fam.closed, n), published))
            if label != 'L3' or n <= max_dp_l3:
                results.append(CheckResult(name + '.tilings', (n,),
                    count2d.count_tilings(builder(n)), published))
        logger.debug('table1 row %d done', n)
    return Report(results)

def verify_table2(max_n=10, max_dp=8):
    """
    The published tower values by recurrence, closed form and brick count
    up to `max_dp`.
    """
    _bounded('max_n', max_n, 1, 10)
    family = catalog().T
    results = []
    for n in range(1, max_n + 1):
        published = TABLE2[n]
        results.append(CheckResult('table2.T.recurrence', (n,),
            rec_eval_iter(family.recurrence, n), published))
        results.append(CheckResult('table2.T.closed', (n,),
            closed_eval(family.closed, n), published))
        if n <= max_dp:
            results.append(CheckResult('table2.T.bricks', (n,),
                solid3d.count_bricks(solid3d.tower(n)), published))
    return Report(results)

def verify_thm21(max_n=5, max_k=5):
    """
    Tilings of the L3 right angle against A_n A_k + C_(n-1) B_(k-1) +
    B_(n-2) B_(k-1).  The identity is stated for n >= 2; n = 1 is checked
    too and reported as `thm21.extension`.
    """
    _bounded('max_n', max_n, 1)
    _bounded('max_k', max_k, 1)
    results = []
    for n in range(1, max_n + 1):
        name = 'thm21' if n >= 2 else 'thm21.extension'
        for k in range(1, max_k + 1):
            results.append(CheckResult(name, (n, k),
                count2d.count_tilings(regions2d.l3_region(n, k)), l3(n, k)))
    return Report(results)

def verify_crux(max_n=200):
    """L3(2n, 2n) = A_2n, at sequence level"""
    _bounded('max_n', max_n, 1)
    families = catalog()
    a_values = families.A.values(1, 2 * max_n)
    results = []
    for n in range(1, max_n + 1):
        diagonal = l3(n, n)
        results.append(CheckResult('crux.recurrence', (n,),
            diagonal, a_values[2 * n - 1]))
        results.append(CheckResult('crux.closed', (n,),
            diagonal, closed_eval(families.A.closed, 2 * n)))
        results.append(CheckResult('crux.diagonal', (n,),
            diagonal, closed_eval(families.L3diag.closed, n)))
    return Report(results)

def verify_thm32(max_n=200, max_layers=9):
    """T_2n = A_n^2 and T_(2n+1) = 2 B_n^2, geometric up to `max_layers`"""
    _bounded('max_n', max_n, 1)
    families = catalog()
    t_values = families.T.values(1, 2 * max_n + 1)
    a_values = families.A.values(1, max_n)
    b_values = families.B.values(1, max_n)
    results = []
    for n in range(1, max_n + 1):
        even, odd = a_values[n - 1] ** 2, 2 * b_values[n - 1] ** 2
        results.append(CheckResult('thm32.even', (n,),
            t_values[2 * n - 1], even))
        results.append(CheckResult('thm32.odd', (n,),
            t_values[2 * n], odd))
        if 2 * n <= max_layers:
            results.append(CheckResult('thm32.even.bricks', (n,),
                solid3d.count_bricks(solid3d.tower(2 * n)), even))
        if 2 * n + 1 <= max_layers:
            results.append(CheckResult('thm32.odd.bricks', (n,),
                solid3d.count_bricks(solid3d.tower(2 * n + 1)), odd))
    return Report(results)

def verify_tauraso(max_n=10, max_k=10, diag_max=200):
    """
    Tilings of the width-2 right angle against F_n F_(k-1) + F_(n-1) F_k,
    the shifted Fibonacci edge case L2(n, 1) = F_(n+1), and the L2(n, n-1)
    closed form.
    """
    _bounded('max_n', max_n, 1)
    _bounded('max_k', max_k, 1)
    _bounded('diag_max', diag_max, 1)
    families = catalog()
    results = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            results.append(CheckResult('tauraso', (n, k),
                count2d.count_tilings(regions2d.l2_region(n, k)), l2(n, k)))
        results.append(CheckResult('tauraso.edge', (n,),
            l2(n, 1), families.F.term(n + 1)))
    for n in range(1, diag_max + 1):
        results.append(CheckResult('tauraso.diagonal', (n,),
            closed_eval(families.L2diag.closed, n), l2(n, n - 1)))
    return Report(results)

def verify_coupled_recurrences(max_n=500):
    """
    The coupled systems behind A, B, C and T, M, and the order-3 forms of
    T and M, on the catalog values.
    """
    _bounded('max_n', max_n, 1)
    families = catalog()
    # index i holds the value at n = i - 1, so n = 0 is available
    a = families.A.values(1, max_n)
    a = [families.A.term(0)] + a
    b = families.B.values(0, max_n)
    c = families.C.values(0, max_n)
    t = [families.T.term(0)] + families.T.values(1, max_n)
    m = [families.M.term(0)] + families.M.values(1, max_n)
    results = []
    for n in range(1, max_n + 1):
        results.append(CheckResult('recurrences.A', (n,),
            a[n], a[n - 1] + 2 * b[n - 1]))
        results.append(CheckResult('recurrences.B', (n,),
            b[n], a[n] + b[n - 1]))
        results.append(CheckResult('recurrences.C', (n,),
            c[n], a[n] + b[n]))
        results.append(CheckResult('recurrences.M', (n,),
            m[n], t[n - 1] + m[n - 1]))
        if n >= 2:
            results.append(CheckResult('recurrences.T', (n,),
                t[n], 2 * t[n - 1] + t[n - 2] + 4 * m[n - 1]))
        if n >= 3:
            results.append(CheckResult('recurrences.T.order3', (n,),
                t[n], 3 * t[n - 1] + 3 * t[n - 2] - t[n - 3]))
            results.append(CheckResult('recurrences.M.order3', (n,),
                m[n], 3 * m[n - 1] + 3 * m[n - 2] - m[n - 3]))
    return Report(results)

def verify_charpoly(max_n=500):
    """
    Every family is annihilated by its characteristic polynomial, and the
    bases of each closed form are roots of it.
    """
    _bounded('max_n', max_n, 1)
    results = []
    for fam in catalog():
        poly = fam.recurrence.charpoly()
        d = len(poly) - 1
        values = fam.values(fam.start, fam.start + max_n + d - 1)
        for offset in range(max_n):
            window = values[offset:offset + d + 1]
            residual = sum(p * v for p, v in zip(poly, reversed(window)))
            results.append(CheckResult('charpoly.%s' % fam.token,
                (fam.start + offset + d,), residual, 0))
        if fam.closed is None:
            continue
        for position, root in enumerate(fam.closed.bases()):
            value = 0
            for p in poly:
                value = value * root + p
            results.append(CheckResult('charpoly.%s.root' % fam.token,
                (position,), int(value != 0), 0))
    return Report(results)

def verify_evaluators(max_n=500):
    """iter, matpow and closed agree on every family"""
    _bounded('max_n', max_n, 1)
    results = []
    for fam in catalog():
        expected = fam.values(fam.start, max_n)
        for n, value in zip(range(fam.start, max_n + 1), expected):
            results.append(CheckResult('evaluators.%s.matpow' % fam.token,
                (n,), rec_eval_matpow(fam.recurrence, n), value))
            if fam.closed is not None:
                results.append(CheckResult('evaluators.%s.closed' % fam.token,
                    (n,), closed_eval(fam.closed, n), value))
    return Report(results)

def run_suite(suite, **bounds):
    """run one suite by name; `bounds` are passed on as keyword arguments"""
    runners = {
        'table1': verify_table1,
        'table2': verify_table2,
        'thm21': verify_thm21,
        'crux': verify_crux,
        'thm32': verify_thm32,
        'tauraso': verify_tauraso,
        'recurrences': verify_coupled_recurrences,
        'charpoly': verify_charpoly,
        'evaluators': verify_evaluators,
    }
    if suite == 'all':
        return Report.merge(*[runners[name]() for name in SUITES])
    if suite not in runners:
        raise ValueError('unknown suite `%s`, expected one of %s' % \
            (suite, ', '.join(SUITES + ('all',))))
    logger.debug('running suite %s with %r', suite, bounds)
    return runners[suite](**bounds)
