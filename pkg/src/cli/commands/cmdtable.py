"""
The command table: names and aliases mapped to command instances.
"""

from src.cli.commands.exceptions import DuplicateCommandException
from src.expr.parser import suggest_name


class CommandTable(object):
    """
    Where :py:class:`CommandHandler` looks up what ``argv[0]`` refers to.
    Sub-classes list their commands in :py:attr:`commands`; see
    :py:class:`GlobalCommandTable`.

    :attr list commands: :py:class:`BaseCommand` instances to register.
    """

    commands = []

    def __init__(self):
        # Full command name -> command instance.
        self._commands = {}
        # Alias -> the same instance found in _commands.
        self._aliases = {}

        for command in self.commands:
            self.add_command(command)

    def add_command(self, command):
        """
        Registers a command under its name and aliases. Nothing is
        registered if any of them is taken.

        :param BaseCommand command: The command to add.
        :raises: :class:`DuplicateCommandException`
        """

        if command.name in self._commands:
            raise DuplicateCommandException(
                'Command name %r is already taken.' % command.name)

        for alias in command.aliases:
            if alias in self._aliases:
                raise DuplicateCommandException(
                    'Command alias %r is already taken.' % alias)

        self._commands[command.name] = command
        for alias in command.aliases:
            self._aliases[alias] = command

    def lookup_command(self, parsed_command):
        """
        Names win over aliases.

        :param ParsedCommand parsed_command: The parsed command line.
        :returns: The matching ``BaseCommand``, or ``None``.
        """

        return self.match_name(parsed_command.command_str) or \
            self.match_alias(parsed_command.command_str)

    def match_name(self, name):
        """
        :param str name: The potential command name to match on the table.
        :returns: The matching command, or ``None``.
        """

        return self._commands.get(name)

    def match_alias(self, alias):
        """
        :param str alias: The potential command alias to match on the table.
        :returns: The matching command, or ``None``.
        """

        return self._aliases.get(alias)

    def suggest(self, name):
        """
        Closest command name or alias to a misspelled one.

        :param str name: What the user typed.
        :rtype: str or None
        """

        return suggest_name(name, sorted(self._commands) + sorted(self._aliases))

    def names(self):
        """
        :rtype: list
        :returns: Full command names, sorted.
        """

        return sorted(self._commands)

    def get_commands(self):
        """
        :rtype: list
        :returns: Command instances, sorted by name.
        """

        return [self._commands[name] for name in self.names()]
