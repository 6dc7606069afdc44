#!/usr/bin/env python
# coding:utf-8

"""unit test cases for quad.py"""

import random
import unittest
from fractions import Fraction

from tilecount.quad import ClosedForm, ClosedFormError, QuadExpr

def random_quad(rng, d=3):
    def rational():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))
    return QuadExpr(rational(), rational(), d)

class TestQuadExpr(unittest.TestCase):
    """test: arithmetic in Q(sqrt d)"""
    def setUp(self):
        self.rng = random.Random(1729)
    def test_ring_laws(self):
        for _ in range(200):
            x, y, z = [random_quad(self.rng) for _ in range(3)]
            self.assertEqual(x + y, y + x)
            self.assertEqual(x * y, y * x)
            self.assertEqual((x + y) + z, x + (y + z))
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual(x - x, 0)
    def test_division(self):
        for _ in range(200):
            x, y = random_quad(self.rng), random_quad(self.rng)
            if y == 0:
                continue
            self.assertEqual((x / y) * y, x)
    def test_conjugation_is_a_homomorphism(self):
        for _ in range(200):
            x, y = random_quad(self.rng, 5), random_quad(self.rng, 5)
            self.assertEqual((x * y).conjugate(),
                x.conjugate() * y.conjugate())
            self.assertEqual((x + y).conjugate(),
                x.conjugate() + y.conjugate())
            self.assertEqual(x.norm(), x * x.conjugate())
    def test_unit(self):
        unit = QuadExpr(2, 1, 3)
        self.assertEqual(unit.norm(), 1)
        self.assertEqual(unit ** 2, QuadExpr(7, 4, 3))
        self.assertEqual(unit ** 0, 1)
        self.assertEqual(unit * unit.conjugate(), 1)
    def test_mixed_with_rationals(self):
        x = QuadExpr(1, 1, 3)
        self.assertEqual(2 * x, QuadExpr(2, 2, 3))
        self.assertEqual(x + Fraction(1, 2), QuadExpr(Fraction(3, 2), 1, 3))
        self.assertEqual(1 - x, QuadExpr(0, -1, 3))
        self.assertEqual(1 / QuadExpr(2, 1, 3), QuadExpr(2, -1, 3))
        self.assertEqual(hash(QuadExpr(5, 0, 3)), hash(5))
    def test_mixed_radicands(self):
        self.assertRaises(TypeError, lambda: QuadExpr(1, 1, 3) + \
            QuadExpr(1, 1, 5))
    def test_bad_radicand(self):
        for d in (0, 1, 4, 12, -3):
            self.assertRaises(ValueError, QuadExpr, 1, 1, d)
    def test_division_by_zero(self):
        self.assertRaises(ZeroDivisionError, lambda: QuadExpr(1, 1, 3) / 0)
    def test_bad_exponent(self):
        self.assertRaises(ValueError, lambda: QuadExpr(1, 1, 3) ** -1)
    def test_immutable(self):
        x = QuadExpr(1, 1, 3)
        def assign():
            x.a = 2
        self.assertRaises(AttributeError, assign)

class TestClosedForm(unittest.TestCase):
    """test: ClosedForm evaluation"""
    def test_pell_like(self):
        unit = QuadExpr(2, 1, 3)
        half = QuadExpr(Fraction(1, 2), Fraction(1, 6), 3)
        form = ClosedForm([(half, unit), (half.conjugate(), unit.conjugate())])
        self.assertEqual([form.evaluate(n) for n in range(5)],
            [1, 3, 11, 41, 153])
        self.assertEqual(form.radicand(), 3)
        self.assertEqual(len(form.bases()), 2)
    def test_irrational_result(self):
        form = ClosedForm([(QuadExpr(0, 1, 3), QuadExpr(1, 0, 3))], 0, 'bad')
        self.assertRaises(ClosedFormError, form.evaluate, 2)
    def test_fractional_result(self):
        form = ClosedForm([(QuadExpr(Fraction(1, 2), 0, 3), 1)])
        self.assertRaises(ClosedFormError, form.evaluate, 0)
    def test_negative_result(self):
        form = ClosedForm([(QuadExpr(-1, 0, 5), QuadExpr(2, 0, 5))])
        self.assertRaises(ClosedFormError, form.evaluate, 3)
    def test_below_start(self):
        form = ClosedForm([(QuadExpr(1, 0, 3), 1)], start=2)
        self.assertEqual(form.evaluate(2), 1)
        self.assertRaises(ClosedFormError, form.evaluate, 1)
    def test_needs_one_radicand(self):
        self.assertRaises(ValueError, ClosedForm, [(1, 2)])
        self.assertRaises(ValueError, ClosedForm,
            [(QuadExpr(1, 0, 3), 1), (QuadExpr(1, 0, 5), 1)])

if __name__ == '__main__':
    unittest.main()
