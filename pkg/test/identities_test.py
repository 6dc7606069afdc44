#!/usr/bin/env python
# coding:utf-8

"""unit test cases for identities.py"""

import json
import unittest

import tilecount.identities as identities
from tilecount.identities import CheckResult, Report

class TestReport(unittest.TestCase):
    """test: CheckResult and Report"""
    def setUp(self):
        self.results = [
            CheckResult('b', (2,), 5, 5),
            CheckResult('a', (10,), 3, 4),
            CheckResult('a', (2,), 7, 7),
        ]
    def test_sorted_by_name_then_params(self):
        report = Report(self.results)
        self.assertEqual([(r.name, r.params) for r in report],
            [('a', (2,)), ('a', (10,)), ('b', (2,))])
    def test_summary_and_failures(self):
        report = Report(self.results)
        self.assertEqual(report.summary(), (3, 2, 1))
        self.assertFalse(report.ok())
        self.assertEqual(report.failures(), [CheckResult('a', (10,), 3, 4)])
        self.assertTrue(Report().ok())
    def test_record(self):
        record = CheckResult('x', (1, 2), 10 ** 30, 10 ** 30).record()
        self.assertEqual(record, {'name': 'x', 'params': [1, 2],
            'left': '1' + '0' * 30, 'right': '1' + '0' * 30, 'pass': True})
    def test_json_lines(self):
        lines = Report(self.results).to_json_lines().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(json.loads(lines[1])['pass'], False)
    def test_text_shows_witnesses(self):
        text = Report(self.results).to_text()
        self.assertIn('FAIL a (10,): 3 != 4', text)
        self.assertNotIn('PASS', text)
        self.assertTrue(text.endswith('3 checks, 2 passed, 1 failed'))
        self.assertIn('PASS b (2,): 5 == 5',
            Report(self.results).to_text(verbose=True))
    def test_merge(self):
        merged = Report.merge(Report(self.results[:1]),
            Report(self.results[1:]))
        self.assertEqual(merged, Report(self.results))

class TestSuites(unittest.TestCase):
    """test: every suite holds on its default bounds"""
    def assertSuite(self, report, at_least):
        self.assertTrue(report.ok(), report.to_text())
        self.assertGreaterEqual(len(report), at_least)
    def test_table1(self):
        report = identities.verify_table1()
        self.assertSuite(report, 10 * 4 * 2 + 10 * 3 + 6)
        names = set(r.name for r in report)
        self.assertIn('table1.L3.tilings', names)
        self.assertIn('table1.A.closed', names)
    def test_table2(self):
        self.assertSuite(identities.verify_table2(), 28)
    def test_thm21(self):
        report = identities.verify_thm21()
        self.assertSuite(report, 25)
        self.assertEqual(sorted(set(r.name for r in report)),
            ['thm21', 'thm21.extension'])
    def test_crux(self):
        self.assertSuite(identities.verify_crux(), 600)
    def test_thm32(self):
        self.assertSuite(identities.verify_thm32(), 400 + 8)
    def test_tauraso(self):
        self.assertSuite(identities.verify_tauraso(), 100 + 10 + 200)
    def test_recurrences(self):
        self.assertSuite(identities.verify_coupled_recurrences(), 2000)
    def test_charpoly(self):
        report = identities.verify_charpoly(100)
        self.assertSuite(report, 800)
        self.assertIn('charpoly.T.root', set(r.name for r in report))
    def test_evaluators(self):
        self.assertSuite(identities.verify_evaluators(200), 1000)
    def test_deterministic(self):
        first = identities.run_suite('tauraso', max_n=6, max_k=6, diag_max=50)
        second = identities.run_suite('tauraso', max_n=6, max_k=6,
            diag_max=50)
        self.assertEqual(first.to_json_lines(), second.to_json_lines())
    def test_bad_bounds(self):
        self.assertRaises(ValueError, identities.verify_table1, 11)
        self.assertRaises(ValueError, identities.verify_crux, 0)
        self.assertRaises(ValueError, identities.run_suite, 'nope')

if __name__ == '__main__':
    unittest.main()
