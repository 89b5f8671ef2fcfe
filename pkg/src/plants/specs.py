"""
Textual plant specs, as given on the command line::

    diffusion:a=0.5
    delay_pole:T=1,a=1
    delay_zero:T=1,a=1,b=0.1
    retarded:delta=0.05
    expr:n=<formula>;d=<formula>
    gain:k=-2                     (controllers only)

A bare family name uses that family's default parameters.
"""

from collections import OrderedDict
from dataclasses import dataclass, field

from src.expr.exceptions import ExpressionSyntaxError
from src.expr.parser import parse, suggest_name
from src.plants import delays, diffusion
from src.plants.exceptions import PlantSpecError
from src.plants.factorization import Factorization, FactorEvaluator

# family -> (builder, parameter defaults in builder argument order)
FAMILIES = OrderedDict([
    ('diffusion', (diffusion.diffusion_factorization, OrderedDict([('a', 0.5)]))),
    ('delay_pole', (delays.delay_pole_factorization,
                    OrderedDict([('T', 1.0), ('a', 1.0)]))),
    ('delay_zero', (delays.delay_zero_factorization,
                    OrderedDict([('T', 1.0), ('a', 1.0), ('b', 0.1)]))),
    ('retarded', (delays.retarded_factorization, OrderedDict([('delta', 0.05)]))),
])
EXPR_FAMILY = 'expr'


def gain_factorization(k):
    """
    A static gain c = k, as a controller: n = k, d = 1.

    :rtype: Factorization
    """

    k = float(k)
    return Factorization(
        FactorEvaluator.constant(k), FactorEvaluator.constant(1.0),
        'gain(k=%r)' % k, transfer=FactorEvaluator.constant(k),
        params={'k': k})


# Families only meaningful as controllers.
CONTROLLER_FAMILIES = OrderedDict([
    ('gain', (gain_factorization, OrderedDict([('k', -1.0)]))),
])


@dataclass(frozen=True)
class PlantSpec(object):
    """
    A parsed plant spec.

    :attr str family: One of :py:data:`FAMILIES`, or ``'expr'``.
    :attr dict params: Numeric parameters, or ``n``/``d`` formula text for
        the ``expr`` family.
    """

    family: str
    params: dict = field(default_factory=dict)

    def to_text(self):
        if self.family == EXPR_FAMILY:
            return 'expr:n=%s;d=%s' % (self.params['n'], self.params['d'])
        body = ','.join('%s=%r' % (k, v) for k, v in self.params.items())
        return '%s:%s' % (self.family, body)

    def warnings(self):
        """
        Non-fatal remarks about the parameters.

        :rtype: list
        """

        if self.family == 'diffusion':
            return diffusion.check_parameter(self.params['a'])
        return []

    def build(self):
        """
        Builds and sanity checks the factorization.

        :rtype: Factorization
        :raises: :py:exc:`ParameterRangeError`, :py:exc:`FactorizationError`
        """

        if self.family == EXPR_FAMILY:
            return expr_factorization(self.params['n'], self.params['d'])
        builder, _ = _family_table(self.family)[self.family]
        return builder(**self.params).check()


def expr_factorization(n_text, d_text, label=None):
    """
    Factorization from user formulas. Coprimeness is the user's claim to
    make, so it isn't assumed.

    :rtype: Factorization
    """

    try:
        n = FactorEvaluator.from_expr(parse(n_text))
        d = FactorEvaluator.from_expr(parse(d_text))
    except ExpressionSyntaxError as e:
        raise PlantSpecError('Bad formula in plant spec: %s' % e)
    return Factorization(
        n, d, label or 'expr(n=%s;d=%s)' % (n_text, d_text),
        claims_coprime=False,
        params={'n': n_text, 'd': d_text}).check()


def _parse_expr_body(body):
    params = {}
    for part in body.split(';'):
        key, sep, value = part.partition('=')
        key = key.strip()
        if not sep or key not in ('n', 'd') or not value.strip():
            raise PlantSpecError(
                'expr plant spec needs n=<formula>;d=<formula>, got %r' % body)
        params[key] = value.strip()
    if set(params) != {'n', 'd'}:
        raise PlantSpecError('expr plant spec needs both n and d')
    return params


def _family_table(family):
    if family in CONTROLLER_FAMILIES:
        return CONTROLLER_FAMILIES
    return FAMILIES


def _parse_numeric_body(family, body):
    _, defaults = _family_table(family)[family]
    params = OrderedDict(defaults)
    if not body.strip():
        return params
    for part in body.split(','):
        key, sep, value = part.partition('=')
        key = key.strip()
        if not sep:
            raise PlantSpecError('Expected key=value in %r' % part)
        if key not in defaults:
            suggestion = suggest_name(key, list(defaults))
            msg = 'Unknown parameter %r for %s' % (key, family)
            if suggestion:
                msg += ' (did you mean %r?)' % suggestion
            raise PlantSpecError(msg)
        try:
            params[key] = float(value)
        except ValueError:
            raise PlantSpecError('Parameter %s=%r is not a number' % (key, value))
    return params


def parse_plant_spec(text, controller=False):
    """
    :param str text: The spec, e.g. ``'delay_pole:T=1,a=1'``.
    :param bool controller: Also accept controller-only families such as
        ``gain:k=-2``.
    :rtype: PlantSpec
    :raises: :py:exc:`PlantSpecError`
    """

    family, _, body = text.strip().partition(':')
    family = family.strip()
    if family == EXPR_FAMILY:
        return PlantSpec(family, _parse_expr_body(body))
    known = list(FAMILIES) + [EXPR_FAMILY]
    if controller:
        known += list(CONTROLLER_FAMILIES)
    if family not in known:
        suggestion = suggest_name(family, known)
        msg = 'Unknown %s family %r' % ('controller' if controller else 'plant', family)
        if suggestion:
            msg += ' (did you mean %r?)' % suggestion
        raise PlantSpecError(msg)
    return PlantSpec(family, _parse_numeric_body(family, body))


def default_factorizations():
    """
    One factorization per built-in family, at default parameters.

    :rtype: list
    """

    return [PlantSpec(name, OrderedDict(defaults)).build()
            for name, (_, defaults) in FAMILIES.items()]


def build_plant(text, controller=False):
    """
    Shortcut: parse a spec and build it.

    :rtype: Factorization
    """

    return parse_plant_spec(text, controller=controller).build()
