"""
The ``nugap`` command line tool.
"""

from src.cli.commands.handler import CommandHandler, Invocation


def main(argv, stdout=None, stderr=None):
    """
    Runs one command line.

    :param list argv: Arguments, without the program name.
    :rtype: int
    :returns: The exit code.
    """

    from src.cli.global_cmdtable import GlobalCommandTable

    handler = CommandHandler(GlobalCommandTable())
    return handler.handle_input(Invocation(stdout, stderr), argv)
