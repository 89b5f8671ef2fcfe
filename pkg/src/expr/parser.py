"""
Formula parsing. :py:class:`ExpressionParser` tokenizes the input and builds
an expression tree out of :py:mod:`src.expr.nodes`.

Grammar::

    expr   := term { ("+"|"-") term } ;
    term   := factor { ("*"|"/") factor } ;
    factor := "-" factor | power ;
    power  := atom [ "^" ["-"] integer ] ;
    atom   := number | "i" | "s" | "pi" | "euler"
            | ident "(" expr ")" | "(" expr ")" ;
    ident  := "sqrt" | "log" | "exp" | "sinh" | "cosh" | "tanh" ;

Unary minus sits below ``^``, so ``-s^2`` is ``-(s^2)``.
"""

import math
import re
from collections import namedtuple

from fuzzywuzzy import fuzz, process

from src.expr import nodes
from src.expr.exceptions import ExpressionSyntaxError, UnknownIdentifier

CONSTANTS = {
    'pi': math.pi,
    'euler': math.e,
}
KNOWN_NAMES = ('s', 'i') + tuple(CONSTANTS) + nodes.FUNCTIONS

Token = namedtuple('Token', 'kind text offset')

NUMBER_RE = re.compile(r'\d+(\.\d*)?([eE][+-]?\d+)?')
INTEGER_RE = re.compile(r'\d+$')
IDENT_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
OPERATORS = '+-*/^()'
END = 'end of input'


def suggest_name(name, choices, cutoff=60):
    """
    Closest match for a misspelled name, or ``None``.

    :param str name: What the user typed.
    :param choices: Known names.
    :rtype: str or None
    """

    match = process.extractOne(name, choices, scorer=fuzz.QRatio,
                               score_cutoff=cutoff)
    if match:
        return match[0]
    return None


class ExpressionParser(object):
    """
    Recursive descent parser. One instance may be reused, but not shared
    between threads while parsing; the module-level :py:func:`parse` creates
    a fresh one each time.
    """

    def __init__(self):
        self._tokens = []
        self._pos = 0
        # Token kinds checked since the last consumed token. Reported when
        # parsing fails.
        self._expected = set()

    def tokenize(self, text):
        """
        Splits the text into tokens. Offsets are byte offsets into the
        UTF-8 encoding of ``text``.

        :rtype: list
        """

        tokens = []
        i = 0
        while i < len(text):
            char = text[i]
            offset = len(text[:i].encode('utf-8'))
            if char.isspace():
                i += 1
                continue
            if char in OPERATORS:
                tokens.append(Token(char, char, offset))
                i += 1
                continue
            match = NUMBER_RE.match(text, i)
            if match:
                tokens.append(Token('number', match.group(0), offset))
                i = match.end()
                continue
            match = IDENT_RE.match(text, i)
            if match:
                tokens.append(Token('identifier', match.group(0), offset))
                i = match.end()
                continue
            raise ExpressionSyntaxError(
                'Unexpected character %r' % char, offset,
                ('number', 'identifier', '(', '-'))
        tokens.append(Token(END, '', len(text.encode('utf-8'))))
        return tokens

    def parse(self, raw_input):
        """
        Do the magic.

        :param str raw_input: Formula text.
        :rtype: :class:`src.expr.nodes.Expr`
        :raises: :py:exc:`ExpressionSyntaxError`, :py:exc:`UnknownIdentifier`
        """

        self._tokens = self.tokenize(raw_input)
        self._pos = 0
        self._expected = set()

        tree = self._expr()
        if not self._check(END):
            self._fail('Unexpected %r' % self._peek().text)
        return tree

    def _peek(self):
        return self._tokens[self._pos]

    def _check(self, kind):
        self._expected.add(kind)
        return self._peek().kind == kind

    def _advance(self):
        token = self._tokens[self._pos]
        self._pos += 1
        self._expected = set()
        return token

    def _fail(self, message):
        token = self._peek()
        if token.kind == END:
            message = 'Unexpected end of input'
        raise ExpressionSyntaxError(message, token.offset, self._expected)

    def _expect(self, kind):
        if not self._check(kind):
            self._fail('Unexpected %r' % self._peek().text)
        return self._advance()

    def _expr(self):
        left = self._term()
        while True:
            if self._check('+'):
                self._advance()
                left = nodes.Add(left, self._term())
            elif self._check('-'):
                self._advance()
                left = nodes.Sub(left, self._term())
            else:
                return left

    def _term(self):
        left = self._factor()
        while True:
            if self._check('*'):
                self._advance()
                left = nodes.Mul(left, self._factor())
            elif self._check('/'):
                self._advance()
                left = nodes.Div(left, self._factor())
            else:
                return left

    def _factor(self):
        if self._check('-'):
            self._advance()
            return nodes.Neg(self._factor())
        return self._power()

    def _power(self):
        base = self._atom()
        if not self._check('^'):
            return base
        self._advance()
        sign = 1
        if self._check('-'):
            self._advance()
            sign = -1
        token = self._peek()
        if not self._check('number') or not INTEGER_RE.match(token.text):
            self._expected = {'integer'}
            self._fail('Exponent must be an integer, got %r' % token.text)
        self._advance()
        return nodes.Pow(base, sign * int(token.text))

    def _atom(self):
        token = self._peek()
        if self._check('number'):
            self._advance()
            return nodes.Const(complex(float(token.text)))
        if self._check('('):
            self._advance()
            inner = self._expr()
            self._expect(')')
            return inner
        if self._check('identifier'):
            return self._identifier()
        self._fail('Unexpected %r' % token.text)

    def _identifier(self):
        token = self._advance()
        name = token.text
        if name == 's':
            return nodes.Var()
        if name == 'i':
            return nodes.ImagUnit()
        if name in CONSTANTS:
            return nodes.Const(complex(CONSTANTS[name]), name=name)
        if name in nodes.FUNCTIONS:
            self._expect('(')
            inner = self._expr()
            self._expect(')')
            return nodes.Apply(name, inner)
        raise UnknownIdentifier(name, token.offset,
                                suggest_name(name, KNOWN_NAMES))


def parse(text):
    """
    Parses formula text into an expression tree.

    :param str text: The formula, e.g. ``'sqrt(s)/(sqrt(s)+1)'``.
    :rtype: :class:`src.expr.nodes.Expr`
    """

    return ExpressionParser().parse(text)
