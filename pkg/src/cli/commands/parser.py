"""
Command line parsing. :py:class:`CommandParser` breaks up argv and tosses
out a :py:class:`ParsedCommand` instance.
"""

from src.cli.commands.exceptions import CommandError

# Flags that take a value, either as ``--flag value`` or ``--flag=value``.
VALUE_FLAGS = (
    'plant1', 'plant2', 'controller', 'ymin', 'ymax', 'grid-n',
    'refine-iters', 'radii', 'circle-n', 'format', 'out',
)
# Flags that are either there or not.
BOOLEAN_FLAGS = ('sweep', 'verbose')


class ParsedCommand(object):
    """
    A parsed command, broken up into something the command handler can
    muddle through.

    :attr str command_str: The command that was passed.
    :attr dict switches: Flag name (without dashes) to value. Boolean flags
        map to ``True``.
    :attr list arguments: Positional arguments, in order.
    """

    def __init__(self, command_str, switches, arguments):
        self.command_str = command_str
        self.switches = dict(switches)
        self.arguments = list(arguments)
        self.argument_string = ' '.join(self.arguments)

    def switch(self, name, default=None):
        """
        :param str name: Flag name, e.g. ``'grid-n'``.
        :returns: The flag's value, or ``default`` if it wasn't given.
        """

        return self.switches.get(name, default)


class CommandParser(object):
    """
    Parses argv. The first positional token is the command, everything else
    positional is an argument (plant specs, mostly).
    """

    def parse(self, argv):
        """
        :param list argv: Command line tokens, without the program name.
        :rtype: :class:`ParsedCommand`
        :raises: :py:exc:`CommandError` on unknown flags or missing values.
        """

        if not argv:
            raise CommandError('No command given. Try: nugap commands')

        switches = {}
        positional = []
        tokens = list(argv)
        while tokens:
            token = tokens.pop(0)
            if token == '--':
                positional.extend(tokens)
                break
            if not token.startswith('--') or len(token) == 2:
                positional.append(token)
                continue

            name, sep, value = token[2:].partition('=')
            if name in BOOLEAN_FLAGS:
                if sep:
                    raise CommandError('--%s takes no value' % name)
                switches[name] = True
            elif name in VALUE_FLAGS:
                if not sep:
                    if not tokens:
                        raise CommandError('--%s needs a value' % name)
                    value = tokens.pop(0)
                switches[name] = value
            else:
                raise CommandError('Unknown flag --%s' % name)

        if not positional:
            raise CommandError('No command given. Try: nugap commands')
        # First positional token is the command string, the rest are
        # arguments.
        return ParsedCommand(positional[0], switches, positional[1:])
