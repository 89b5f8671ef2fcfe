"""
Contains a parent class which all commands should inherit from.
"""

from src.cli.commands.exceptions import CommandError
from src.plants.specs import parse_plant_spec
from src.utils.config import NumericConfig

EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_CONDITION_FAILED = 2

# Flag -> (config key, converter).
CONFIG_FLAGS = (
    ('ymin', 'grid.ymin', float),
    ('ymax', 'grid.ymax', float),
    ('grid-n', 'grid.n', int),
    ('refine-iters', 'grid.refine_iters', int),
    ('circle-n', 'circle.n', int),
    ('radii', 'circle.radii',
     lambda text: [float(r) for r in text.split(',') if r.strip()]),
)


class BaseCommand(object):
    """
    A command. All commands should sub-class this and override
    :py:meth:`func`.

    :attr str name: The command name. IE: 'compute'.
    :attr list aliases: Alternative ways to call the command.
    :attr str usage: One-line synopsis for the command listing.
    :attr tuple formats: Accepted ``--format`` values, the first being the
        default.
    """

    name = None
    aliases = []
    usage = ''
    formats = ('json',)

    def func(self, invoker, parsed_command):
        """
        Runs the command.

        :param Invocation invoker: Where output goes.
        :param ParsedCommand parsed_command: The parsed command line.
        :rtype: int
        :returns: The exit code.
        """

        raise NotImplementedError()

    def _get_config(self, parsed_command):
        """
        Settings defaults with the command line overrides applied.

        :rtype: NumericConfig
        :raises: :py:exc:`CommandError` on values that aren't numbers,
            :py:exc:`ConfigurationError` on values out of range.
        """

        overrides = {}
        for flag, key, convert in CONFIG_FLAGS:
            value = parsed_command.switch(flag)
            if value is None:
                continue
            try:
                overrides[key] = convert(value)
            except ValueError:
                raise CommandError('--%s: bad value %r' % (flag, value))
        return NumericConfig.from_settings(**overrides)

    def _get_format(self, parsed_command):
        fmt = parsed_command.switch('format', self.formats[0])
        if fmt not in self.formats:
            raise CommandError('%s: --format must be one of %s, got %r' % (
                self.name, ', '.join(self.formats), fmt))
        return fmt

    def _get_specs(self, parsed_command, minimum, maximum=None):
        """
        Plant specs from ``--plant1``/``--plant2`` followed by the positional
        arguments.

        :param int minimum: Fewest specs the command accepts.
        :param int maximum: Most specs accepted, ``None`` for no limit.
        :rtype: list
        :returns: :py:class:`PlantSpec` instances.
        """

        texts = [parsed_command.switch(flag) for flag in ('plant1', 'plant2')]
        texts = [text for text in texts if text] + parsed_command.arguments
        if len(texts) < minimum:
            raise CommandError('%s needs at least %d plant spec%s, got %d' % (
                self.name, minimum, '' if minimum == 1 else 's', len(texts)))
        if maximum is not None and len(texts) > maximum:
            raise CommandError('%s takes at most %d plant specs, got %d' % (
                self.name, maximum, len(texts)))
        return [parse_plant_spec(text) for text in texts]

    def _build_plants(self, invoker, specs):
        """
        Builds the factorizations, passing parameter warnings on.

        :rtype: list
        """

        plants = []
        for spec in specs:
            for warning in spec.warnings():
                invoker.warn(warning)
            plants.append(spec.build())
        return plants

    def _get_header_str(self, header_text, pad_char='=', width=79):
        """
        Forms and returns a standardized header string.

        :param str header_text: The text to show in the header block.
        :param str pad_char: The character to pad the header with.
        :rtype: str
        """

        buf = (pad_char * 3) + '[' + header_text + ']'
        return buf + pad_char * max(width - len(buf), 0)

    def _get_footer_str(self, pad_char='=', width=79):
        """
        :rtype: str
        """

        return pad_char * width
