"""
Command-related exceptions.
"""

from src.utils.exceptions import NuGapException

# Exit code for bad usage: unknown commands, flags and plant specs.
EXIT_USAGE = 64


class CommandError(NuGapException):
    """
    Raised whenever there is an error in the parsing or execution of a
    command that is the caller's fault. IE: Unknown flags, a missing plant
    spec, a misspelled command.
    """

    def __init__(self, message, exit_code=EXIT_USAGE):
        NuGapException.__init__(self, message)
        self.exit_code = exit_code


class DuplicateCommandException(NuGapException):
    """
    Raised when a command is added whose name or alias is already represented
    in the command table.
    """

    pass
