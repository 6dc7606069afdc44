#!/usr/bin/env python
# coding:utf-8

"""lexical analysis of region specs"""

import re
import sys

from tilecount import TilecountError

class SpecError(TilecountError):
    """a region spec cannot be tokenized or parsed"""
    pass

class Token:
    """
    A token is a string of one or more characters that is significant
    as a group.
    """
    def __init__(self, lexical_unit, value, position, lexer):
        assert type(lexical_unit) == str
        self.__lexical_unit__ = lexical_unit
        self.__raw__ = value
        self.skip = False
        self.value = value
        self.lexer = lexer
        self.position = position
    def __str__(self):
        return "<%s, %s, column %d>" % \
            (self.__lexical_unit__, repr(self.value), self.position + 1)
    def lexical_unit(self):
        """getter : __lexical_unit__"""
        return self.__lexical_unit__
    def raw(self):
        """getter : the matched text before any token function ran"""
        return self.__raw__

class Lexer:
    """Lexer performs lexical analysis"""
    def __init__(self, tokens, raw_tokens):
        """
        `tokens` maps a token name (i.e. lexical unit) to a tuple whose
        first item is a compiled regular expression and whose second item
        is the token function

        `raw_tokens` holds every token name; its order is the precedence
        used when two tokens match the same longest lexeme
        """
        self.__tokens__ = tokens
        self.__raw_tokens__ = raw_tokens
        self.__string__ = None
        self.position = 0
    def get_next_token(self):
        """
        return a token(type: Token) stream
        """
        if self.__string__ is None:
            raise UserWarning('having not specify input string')
        string = self.__string__
        while self.position < len(string):
            best, best_end = None, self.position
            for token in self.__raw_tokens__:
                assert token in self.__tokens__
                found = self.__tokens__[token][0].match(string, self.position)
                if found and found.end() > best_end:
                    best, best_end = token, found.end()
            if best is None:
                raise SpecError("remaining `%s` cannot be tokenized " % \
                    string[self.position:] + "(column %d)" % \
                    (self.position + 1))
            lexeme = string[self.position:best_end]
            next_token = self.__tokens__[best][1](
                Token(best, lexeme, self.position, self)
            )
            self.position = best_end
            if next_token.skip:
                continue
            yield next_token
    def set_string(self, string):
        """set input string"""
        self.__string__ = string
        self.position = 0
    def tokenize(self, string):
        """all tokens of `string` as a list"""
        self.set_string(string)
        return list(self.get_next_token())

def lex():
    """
    return a Lexer built from the caller's `tokens` and `t_<TOKEN>` rules;
    a rule is a regular expression string or a function whose docstring is
    the regular expression
    """
    compiled_tokens = {}
    all_vars = sys._getframe(1).f_locals
    if 'tokens' not in all_vars:
        raise NotImplementedError(
            'Lex need variable `tokens` but not defined'
        )
    tokens = all_vars['tokens']
    if not hasattr(tokens, '__iter__'):
        raise TypeError(
            'Lex expected variable `tokens` to be iterable'
        )
    tokens = tuple(tokens)
    for token in tokens:
        if not token.isupper():
            raise SyntaxError(
                'token `%s` is not uppercase' % token
            )
        if tokens.count(token) > 1:
            raise SyntaxWarning(
                'declared token `%s` %d times' % \
                (token, tokens.count(token))
            )
        func_name = 't_' + token
        if func_name not in all_vars:
            raise NotImplementedError(
                'declared token `%s` but not define `%s`' % \
                (token, func_name)
            )
        func = all_vars[func_name]
        if type(func) is str:
            pattern, func = func, lambda t : t
        else:
            pattern = func.__doc__
        try:
            compiled_tokens[token] = (re.compile(pattern), func)
        except re.error as e:
            raise SyntaxError(
                'regular expression `%s` specified ' % pattern + \
                'in `%s` not valid. Detail: %s' % (func_name, e)
            )
    return Lexer(compiled_tokens, tokens)
