#!/usr/bin/env python
# coding:utf-8

"""unit test cases for lex.py"""

import unittest
import tilecount.lex as lex

class TestLexer(unittest.TestCase):
    """test: Lexer.get_next_token"""
    def setUp(self):
        """set up a lex file"""
        tokens = ('WORD', 'KEYWORD', 'NUMBER', 'SPACE')
        t_KEYWORD = r'rect'
        t_WORD = r'[a-z]+'
        def t_NUMBER(t):
            r'\d+'
            t.value = int(t.value)
            return t
        def t_SPACE(t):
            r'\s+'
            t.skip = True
            return t
        self.lexer = lex.lex()
    def test_tokens(self):
        found = self.lexer.tokenize('ab 12 cd')
        self.assertEqual([t.lexical_unit() for t in found],
            ['WORD', 'NUMBER', 'WORD'])
        self.assertEqual([t.value for t in found], ['ab', 12, 'cd'])
        self.assertEqual(found[1].raw(), '12')
        self.assertEqual([t.position for t in found], [0, 3, 6])
    def test_longest_match(self):
        found = self.lexer.tokenize('rectangle')
        self.assertEqual([t.lexical_unit() for t in found], ['WORD'])
    def test_precedence_on_tie(self):
        found = self.lexer.tokenize('rect')
        self.assertEqual([t.lexical_unit() for t in found], ['WORD'])
    def test_unknown_input(self):
        self.assertRaises(lex.SpecError, self.lexer.tokenize, 'ab ? cd')
    def test_no_string(self):
        lexer = lex.Lexer({}, ())
        self.assertRaises(UserWarning, list, lexer.get_next_token())

class TestLex(unittest.TestCase):
    """test: lex() rule collection"""
    def test_missing_tokens(self):
        with self.assertRaises(NotImplementedError):
            lex.lex()
    def test_missing_rule(self):
        tokens = ('WORD',)
        with self.assertRaises(NotImplementedError):
            lex.lex()
    def test_lowercase_token(self):
        tokens = ('word',)
        t_word = r'[a-z]+'
        with self.assertRaises(SyntaxError):
            lex.lex()
    def test_duplicate_token(self):
        tokens = ('WORD', 'WORD')
        t_WORD = r'[a-z]+'
        with self.assertRaises(SyntaxWarning):
            lex.lex()
    def test_bad_pattern(self):
        tokens = ('WORD',)
        t_WORD = r'[a-z'
        with self.assertRaises(SyntaxError):
            lex.lex()

if __name__ == '__main__':
    unittest.main()
