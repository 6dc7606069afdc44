#!/usr/bin/env python
# coding:utf-8

"""exact arithmetic in quadratic fields Q(sqrt d) and closed forms over them"""

import numbers
from fractions import Fraction

from tilecount import TilecountError

class ClosedFormError(TilecountError):
    """a closed form did not evaluate to a nonnegative integer"""
    pass

def _squarefree(d):
    if d < 2:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True

class QuadExpr:
    """
    a + b*sqrt(d) with rational a, b and a square-free radicand d > 1.
    Values are immutable; every operation is exact.
    """
    __slots__ = ('a', 'b', 'd')
    def __init__(self, a, b=0, d=3):
        if not isinstance(d, int) or not _squarefree(d):
            raise ValueError('radicand must be a square-free integer > 1, ' + \
                'got %r' % d)
        object.__setattr__(self, 'a', Fraction(a))
        object.__setattr__(self, 'b', Fraction(b))
        object.__setattr__(self, 'd', d)
    def __setattr__(self, name, value):
        raise AttributeError('QuadExpr is immutable')
    def __coerce(self, other):
        if isinstance(other, QuadExpr):
            if other.d != self.d:
                raise TypeError('cannot combine sqrt(%d) with sqrt(%d)' % \
                    (self.d, other.d))
            return other
        if isinstance(other, numbers.Rational):
            return QuadExpr(other, 0, self.d)
        return None
    def __add__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return QuadExpr(self.a + other.a, self.b + other.b, self.d)
    __radd__ = __add__
    def __neg__(self):
        return QuadExpr(-self.a, -self.b, self.d)
    def __sub__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return QuadExpr(self.a - other.a, self.b - other.b, self.d)
    def __rsub__(self, other):
        return -self + other
    def __mul__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return QuadExpr(self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a, self.d)
    __rmul__ = __mul__
    def __truediv__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError('division by zero in Q(sqrt %d)' % self.d)
        quotient = self * other.conjugate()
        return QuadExpr(quotient.a / norm, quotient.b / norm, self.d)
    def __rtruediv__(self, other):
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return other / self
    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('exponent must be a nonnegative integer')
        result = QuadExpr(1, 0, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result
    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            return self.b == 0 and self.a == other
        return isinstance(other, QuadExpr) and \
            (self.a, self.b, self.d) == (other.a, other.b, other.d)
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))
    def __repr__(self):
        return 'QuadExpr(%s, %s, %d)' % (self.a, self.b, self.d)
    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = '-' if self.b < 0 else '+'
        return '%s %s %s*sqrt(%d)' % (self.a, sign, abs(self.b), self.d)
    def conjugate(self):
        """a - b*sqrt(d)"""
        return QuadExpr(self.a, -self.b, self.d)
    def norm(self):
        """(a + b*sqrt(d)) * (a - b*sqrt(d)) = a^2 - d*b^2"""
        return self.a * self.a - self.d * self.b * self.b
    def is_rational(self):
        """whether the sqrt(d) coefficient is zero"""
        return self.b == 0

class ClosedForm:
    """
    A finite sum of terms coefficient * base**n over one radicand.

    A (-1)**n term is written as a term whose base is QuadExpr(-1, 0, d).
    Evaluation must cancel the irrational part exactly and produce a
    nonnegative integer; anything else means the formula is wrong.
    """
    def __init__(self, terms, start=0, label=''):
        terms = list(terms)
        radicands = set()
        for coefficient, base in terms:
            for part in (coefficient, base):
                if isinstance(part, QuadExpr):
                    radicands.add(part.d)
        if len(radicands) != 1:
            raise ValueError('closed form terms must share one radicand, ' + \
                'got %s' % sorted(radicands))
        self.__d__ = radicands.pop()
        self.__terms__ = tuple((QuadExpr(0, 0, self.__d__) + c,
            QuadExpr(0, 0, self.__d__) + b) for c, b in terms)
        self.__start__ = start
        self.__label__ = label
    def __repr__(self):
        return '<ClosedForm %s over sqrt(%d), %d terms>' % \
            (self.__label__ or '?', self.__d__, len(self.__terms__))
    def terms(self):
        """getter : tuple of (coefficient, base)"""
        return self.__terms__
    def radicand(self):
        """getter : d"""
        return self.__d__
    def start(self):
        """getter : smallest index the formula is stated for"""
        return self.__start__
    def bases(self):
        """the distinct bases, i.e. the roots behind the formula"""
        seen = []
        for _, base in self.__terms__:
            if base not in seen:
                seen.append(base)
        return seen
    def value(self, n):
        """the exact sum at index n, before any integrality check"""
        total = QuadExpr(0, 0, self.__d__)
        for coefficient, base in self.__terms__:
            total = total + coefficient * base ** n
        return total
    def evaluate(self, n):
        """the integer value at index n"""
        if n < self.__start__:
            raise ClosedFormError('%s is stated for n >= %d, got %d' % \
                (self.__label__ or 'closed form', self.__start__, n))
        total = self.value(n)
        if not total.is_rational():
            raise ClosedFormError(
                '%s at n=%d leaves an irrational part %s*sqrt(%d)' % \
                (self.__label__ or 'closed form', n, total.b, self.__d__))
        if total.a.denominator != 1 or total.a < 0:
            raise ClosedFormError(
                '%s at n=%d is %s, not a nonnegative integer' % \
                (self.__label__ or 'closed form', n, total.a))
        return int(total.a)
