#!/usr/bin/env python
# coding:utf-8

"""linear recurrences, their evaluation and the catalog of tiling sequences"""

import collections
import functools
import logging
from fractions import Fraction

import numpy

from tilecount import TilecountError
from tilecount.quad import ClosedForm, QuadExpr

logger = logging.getLogger(__name__)

METHODS = ('iter', 'matpow', 'closed')

class RecurrenceError(TilecountError):
    """a recurrence was misused or asked for an index it does not define"""
    pass

class LinearRecurrence:
    """
    a(n) = c_1 a(n-1) + ... + c_d a(n-d), with a(start), ..., a(start+d-1)
    given as the initial terms
    """
    def __init__(self, coeffs, initial, start=0):
        coeffs = tuple(int(c) for c in coeffs)
        initial = tuple(int(v) for v in initial)
        if not coeffs:
            raise RecurrenceError('a recurrence needs at least one coefficient')
        if len(initial) != len(coeffs):
            raise RecurrenceError(
                'order %d recurrence needs %d initial terms, got %d' % \
                (len(coeffs), len(coeffs), len(initial)))
        self.__coeffs__ = coeffs
        self.__initial__ = initial
        self.__start__ = start
    def __repr__(self):
        return 'LinearRecurrence(%r, %r, start=%d)' % \
            (self.__coeffs__, self.__initial__, self.__start__)
    def order(self):
        """getter : d"""
        return len(self.__coeffs__)
    def coeffs(self):
        """getter : (c_1, ..., c_d)"""
        return self.__coeffs__
    def initial(self):
        """getter : the d initial terms"""
        return self.__initial__
    def start(self):
        """getter : index of the first initial term"""
        return self.__start__
    def charpoly(self):
        """coefficients of x^d - c_1 x^(d-1) - ... - c_d, leading first"""
        return (1,) + tuple(-c for c in self.__coeffs__)
    def terms(self, first, stop):
        """the terms a(first), ..., a(stop-1) in one linear pass"""
        if first < self.__start__:
            raise RecurrenceError('index %d is below the starting index %d' % \
                (first, self.__start__))
        window = collections.deque(reversed(self.__initial__),
            maxlen=self.order())
        index = self.__start__
        found = []
        for value in self.__initial__:
            if first <= index < stop:
                found.append(value)
            index += 1
        while index < stop:
            value = sum(c * v for c, v in zip(self.__coeffs__, window))
            window.appendleft(value)
            if index >= first:
                found.append(value)
            index += 1
        return found
    def term(self, n):
        """
        a(n) for any integer n.  Indices below the start are reached by
        running the recurrence backwards, which needs c_d = +1 or -1.
        """
        if n >= self.__start__:
            return self.terms(n, n + 1)[0]
        last = self.__coeffs__[-1]
        if last not in (1, -1):
            raise RecurrenceError(
                'cannot extend backwards when the last coefficient is %d' % \
                last)
        window = list(self.__initial__)
        index = self.__start__
        while index > n:
            head = window[-1] - sum(c * v for c, v in
                zip(self.__coeffs__[:-1], reversed(window[:-1])))
            window = [head * last] + window[:-1]
            index -= 1
        return window[0]
    def companion(self):
        """the d x d companion matrix as an exact (object) numpy array"""
        d = self.order()
        matrix = numpy.zeros((d, d), dtype=object)
        matrix[0, :] = self.__coeffs__
        for i in range(1, d):
            matrix[i, i - 1] = 1
        return matrix

def _check_index(rec, n):
    if n < rec.start():
        raise RecurrenceError('index %d is below the starting index %d' % \
            (n, rec.start()))

def rec_eval_iter(rec, n):
    """a(n) by plain iteration"""
    _check_index(rec, n)
    return rec.terms(n, n + 1)[0]

def rec_eval_matpow(rec, n):
    """a(n) by raising the companion matrix to a power"""
    _check_index(rec, n)
    d = rec.order()
    top = rec.start() + d - 1
    if n <= top:
        return rec.initial()[n - rec.start()]
    power = numpy.linalg.matrix_power(rec.companion(), n - top)
    state = numpy.array(list(reversed(rec.initial())), dtype=object)
    logger.debug('matrix power %d of an order %d recurrence', n - top, d)
    return int(power.dot(state)[0])

def closed_eval(cf, n):
    """a(n) from a closed form, exactly"""
    return cf.evaluate(n)

class Family:
    """one named sequence: its recurrence, closed form and bookkeeping"""
    def __init__(self, name, token, recurrence, closed=None, oeis=None,
                 description=''):
        self.name = name
        self.token = token
        self.recurrence = recurrence
        self.closed = closed
        self.oeis = oeis
        self.description = description
    def __repr__(self):
        return '<Family %s>' % self.name
    @property
    def initial(self):
        return self.recurrence.initial()
    @property
    def coeffs(self):
        return self.recurrence.coeffs()
    @property
    def start(self):
        return self.recurrence.start()
    def methods(self):
        """the evaluation methods this family supports"""
        return METHODS if self.closed is not None else METHODS[:2]
    def value(self, n, method='iter'):
        """a(n) by the requested method"""
        _check_index(self.recurrence, n)
        if method == 'iter':
            return rec_eval_iter(self.recurrence, n)
        if method == 'matpow':
            return rec_eval_matpow(self.recurrence, n)
        if method == 'closed':
            if self.closed is None:
                raise RecurrenceError('family %s has no closed form' % \
                    self.token)
            return closed_eval(self.closed, n)
        raise RecurrenceError('unknown method `%s`, expected one of %s' % \
            (method, ', '.join(METHODS)))
    def values(self, first, last, method='iter'):
        """a(first), ..., a(last)"""
        if method == 'iter':
            _check_index(self.recurrence, first)
            return self.recurrence.terms(first, last + 1)
        return [self.value(n, method) for n in range(first, last + 1)]
    def term(self, n):
        """a(n), including backward extension below the start"""
        return self.recurrence.term(n)

Catalog = collections.namedtuple('Catalog',
    ['F', 'A', 'B', 'C', 'T', 'M', 'L3diag', 'L2diag'])

def _pair(coefficient, base):
    """coefficient * base**n plus its conjugate term"""
    return [(coefficient, base), (coefficient.conjugate(), base.conjugate())]

@functools.lru_cache(maxsize=None)
def catalog():
    """all sequence families, in a fixed order"""
    half, third, sixth = Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)
    unit = QuadExpr(2, 1, 3)                      # 2 + sqrt 3
    unit_squared = QuadExpr(7, 4, 3)              # 7 + 4 sqrt 3
    golden_squared = QuadExpr(Fraction(3, 2), half, 5)
    minus_one = QuadExpr(-1, 0, 3)
    return Catalog(
        F=Family('F', 'F', LinearRecurrence((1, 1), (1, 1), 0),
            oeis='A000045',
            description='2 x n strip, F_0 = F_1 = 1'),
        A=Family('A', 'A', LinearRecurrence((4, -1), (3, 11), 1),
            ClosedForm(_pair(QuadExpr(half, sixth, 3), unit), 0, 'A'),
            oeis='A001835', description='3 x 2n rectangle'),
        B=Family('B', 'B', LinearRecurrence((4, -1), (1, 4), 0),
            ClosedForm(_pair(QuadExpr(half, third, 3), unit), 0, 'B'),
            oeis='A001353', description='3 x (2n+1) minus a corner'),
        C=Family('C', 'C', LinearRecurrence((4, -1), (2, 7), 0),
            ClosedForm(_pair(QuadExpr(1, half, 3), unit), 0, 'C'),
            oeis='A001075',
            description='3 x (2n+2) minus two cells of one end'),
        T=Family('T', 'T', LinearRecurrence((3, 3, -1), (2, 9, 32), 1),
            ClosedForm(_pair(QuadExpr(third, sixth, 3), unit) + \
                [(QuadExpr(third, 0, 3), minus_one)], 0, 'T'),
            oeis='A006253', description='2 x 2 x n tower of bricks'),
        M=Family('M', 'M', LinearRecurrence((3, 3, -1), (1, 3, 12), 1),
            description='2 x 2 x n tower minus two top cells'),
        L3diag=Family('L3diag', 'L3',
            LinearRecurrence((14, -1), (11, 153), 1),
            ClosedForm(_pair(QuadExpr(half, sixth, 3), unit_squared), 0,
                'L3diag'),
            oeis='A122769', description='L3(2n, 2n) right angle'),
        L2diag=Family('L2diag', 'L2D',
            LinearRecurrence((2, 2, -1), (1, 3, 7), 1),
            ClosedForm(_pair(QuadExpr(Fraction(2, 5), 0, 5),
                golden_squared) + \
                [(QuadExpr(Fraction(1, 5), 0, 5), QuadExpr(-1, 0, 5))], 0,
                'L2diag'),
            oeis='A061646', description='L2(n, n-1) right angle'),
    )

def family(token):
    """look a family up by CLI token (F A B C T M L3 L2D) or by name"""
    for found in catalog():
        if token in (found.token, found.name):
            return found
    raise RecurrenceError('unknown family `%s`, expected one of %s' % \
        (token, ' '.join(f.token for f in catalog())))

def fibonacci(n):
    """F_n with F_0 = F_1 = 1 (and F_-1 = 0)"""
    return catalog().F.term(n)

def l2(n, k):
    """L2(n, k) = F_n F_(k-1) + F_(n-1) F_k"""
    if n < 1 or k < 0:
        raise RecurrenceError('l2 needs n >= 1 and k >= 0, got (%d, %d)' % \
            (n, k))
    return fibonacci(n) * fibonacci(k - 1) + fibonacci(n - 1) * fibonacci(k)

def l3(n, k):
    """L3(2n, 2k) = A_n A_k + C_(n-1) B_(k-1) + B_(n-2) B_(k-1)"""
    if n < 1 or k < 1:
        raise RecurrenceError('l3 needs n, k >= 1, got (%d, %d)' % (n, k))
    families = catalog()
    a, b, c = families.A, families.B, families.C
    return a.term(n) * a.term(k) + c.term(n - 1) * b.term(k - 1) + \
        b.term(n - 2) * b.term(k - 1)
