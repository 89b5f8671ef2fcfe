"""
Turns argv into a command run and an exit code.
"""

import sys

from twisted.internet.defer import maybeDeferred

from src.boundary.exceptions import BadGridRange
from src.cli.commands.command import EXIT_NUMERIC
from src.cli.commands.exceptions import EXIT_USAGE, CommandError
from src.cli.commands.parser import CommandParser
from src.expr.exceptions import ExpressionSyntaxError
from src.plants.exceptions import (
    FactorizationError, MobiusPoleError, ParameterRangeError, PlantSpecError)
from src.utils import logger
from src.utils.exceptions import ConfigurationError, NuGapException

# Errors that are the caller's to fix: bad specs, bad settings.
USAGE_ERRORS = (
    CommandError, ConfigurationError, BadGridRange, ExpressionSyntaxError,
    PlantSpecError, ParameterRangeError, FactorizationError, MobiusPoleError,
)


class Invocation(object):
    """
    One run of the command line tool. Commands write their product through
    this, so tests can capture it.

    :attr stdout: Receives the JSON/CSV product, and nothing else.
    :attr stderr: Receives warnings and error messages.
    :attr CommandTable command_table: The table the running command came
        from.
    """

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        # Set by the handler before a command runs.
        self.command_table = None

    def emit_to(self, text, out_path=None):
        """
        Writes the command's product.

        :param str text: What to write.
        :param str out_path: File to write instead of stdout.
        """

        if out_path:
            with open(out_path, 'w') as fobj:
                fobj.write(text)
        else:
            self.stdout.write(text)

    def warn(self, message):
        logger.warning(message)
        self.stderr.write('warning: %s\n' % message)

    def error(self, message):
        logger.error(message)
        self.stderr.write('error: %s\n' % message)


class CommandHandler(object):
    """
    This class takes the command line, parses it, and figures out what to
    do.

    :attr CommandTable command_table: The table every command is looked up
        in.
    :attr CommandParser parser: Breaks argv into useful components.
    """

    def __init__(self, command_table):
        """
        :param CommandTable command_table: The commands on offer.
        """

        self.command_table = command_table
        self.parser = CommandParser()

    def _match_user_input_to_command(self, parsed_command):
        """
        :rtype: ``BaseCommand``
        :raises: :py:exc:`CommandError` with a suggestion if nothing matched.
        """

        result = self.command_table.lookup_command(parsed_command)
        if result:
            return result

        msg = 'Unknown command %r.' % parsed_command.command_str
        suggestion = self.command_table.suggest(parsed_command.command_str)
        if suggestion:
            msg += ' Did you mean %r?' % suggestion
        raise CommandError(msg)

    def handle_input(self, invoker, argv):
        """
        Parses argv, finds the command and runs it.

        :param Invocation invoker: Where output goes.
        :param list argv: Command line tokens, without the program name.
        :rtype: int
        :returns: The exit code.
        """

        try:
            parsed_command = self.parser.parse(argv)
            if parsed_command.switch('verbose'):
                logger.start_logging(invoker.stderr)
            cmd_match = self._match_user_input_to_command(parsed_command)
        except CommandError as e:
            invoker.error(e.message)
            return e.exit_code

        invoker.command_table = self.command_table
        d = maybeDeferred(cmd_match.func, invoker, parsed_command)
        d.addErrback(self._handle_usage_error, invoker)
        d.addErrback(self._handle_numeric_error, invoker)
        d.addErrback(self._handle_other_errors, invoker)

        # Commands are synchronous, so the result is already in.
        result = []
        d.addCallback(result.append)
        return result[0]

    def _handle_usage_error(self, failure, invoker):
        failure.trap(*USAGE_ERRORS)
        invoker.error(failure.value.message)
        return getattr(failure.value, 'exit_code', EXIT_USAGE)

    def _handle_numeric_error(self, failure, invoker):
        failure.trap(NuGapException)
        invoker.error(failure.value.message)
        return EXIT_NUMERIC

    def _handle_other_errors(self, failure, invoker):
        """
        If execution reaches this point, we're probably dealing with an
        actual code issue. The traceback goes to the log and stderr.
        """

        invoker.error('A critical error has occurred: %s' % failure.getErrorMessage())
        invoker.stderr.write(failure.getTraceback())
        logger.error('Command handler encountered an error')
        logger.error(failure.getTraceback())
        return EXIT_NUMERIC
