"""
Turns expression trees back into formula text the parser accepts. Output is
fully parenthesized; it is meant to round-trip, not to be pretty.
"""

from src.expr import nodes
from src.utils.general import format_float

_BINARY_SYMBOLS = {
    nodes.Add: '+',
    nodes.Sub: '-',
    nodes.Mul: '*',
    nodes.Div: '/',
}


def _real(value):
    text = format_float(value)
    if value < 0 or text.startswith('-'):
        return '(-%s)' % text.lstrip('-')
    return text


def _const(node):
    if node.name:
        return node.name
    value = complex(node.value)
    if value.imag == 0:
        return _real(value.real)
    if value.real == 0:
        return '(%s*i)' % _real(value.imag)
    return '(%s+%s*i)' % (_real(value.real), _real(value.imag))


def to_text(expr):
    """
    :param Expr expr: The tree to print.
    :rtype: str
    """

    if isinstance(expr, nodes.Var):
        return 's'
    if isinstance(expr, nodes.ImagUnit):
        return 'i'
    if isinstance(expr, nodes.Const):
        return _const(expr)
    if isinstance(expr, nodes.Neg):
        return '(-%s)' % to_text(expr.child)
    if isinstance(expr, nodes.Pow):
        return '(%s^%d)' % (to_text(expr.base), expr.exponent)
    if isinstance(expr, nodes.Apply):
        return '%s(%s)' % (expr.function, to_text(expr.child))
    symbol = _BINARY_SYMBOLS.get(type(expr))
    if symbol is None:
        raise TypeError('Not an expression node: %r' % (expr,))
    return '(%s%s%s)' % (to_text(expr.left), symbol, to_text(expr.right))
