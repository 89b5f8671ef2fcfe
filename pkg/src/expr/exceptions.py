"""
Expression related exceptions.
"""

from src.utils.exceptions import NuGapException


class ExpressionSyntaxError(NuGapException):
    """
    Raised when formula text doesn't match the grammar.

    :attr int offset: Byte offset into the text where parsing stopped.
    :attr tuple expected: Token kinds that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        NuGapException.__init__(self, message)
        self.offset = offset
        self.expected = tuple(sorted(expected))

    def __str__(self):
        msg = '%s (at offset %d' % (self.message, self.offset)
        if self.expected:
            msg += ', expected one of: %s' % ', '.join(self.expected)
        return msg + ')'


class UnknownIdentifier(ExpressionSyntaxError):
    """
    Raised for names that are neither a function, a constant nor ``s``.
    """

    def __init__(self, name, offset, suggestion=None):
        message = 'Unknown identifier %r' % name
        if suggestion:
            message += ' (did you mean %r?)' % suggestion
        ExpressionSyntaxError.__init__(self, message, offset)
        self.name = name
        self.suggestion = suggestion
