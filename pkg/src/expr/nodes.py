"""
Expression tree nodes. All nodes are frozen, so trees can be shared freely
between threads once built.
"""

from dataclasses import dataclass

# Functions that may appear in ``apply`` nodes. sqrt and log use
# principal branches.
FUNCTIONS = ('sqrt', 'log', 'exp', 'sinh', 'cosh', 'tanh')


class Expr(object):
    """
    Base class for all nodes.
    """

    __slots__ = ()


@dataclass(frozen=True)
class Const(Expr):
    value: complex
    # Set for the named constants so the printer can use the name.
    name: str = None


@dataclass(frozen=True)
class Var(Expr):
    """
    The variable ``s``.
    """

    pass


@dataclass(frozen=True)
class ImagUnit(Expr):
    pass


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    child: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Apply(Expr):
    function: str
    child: Expr

    def __post_init__(self):
        if self.function not in FUNCTIONS:
            raise ValueError('Unsupported function: %s' % self.function)


BINARY_NODES = (Add, Sub, Mul, Div)
