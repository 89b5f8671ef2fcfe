from src.cli.commands.cmdtable import CommandTable

from src.cli import general as general_cmds


class GlobalCommandTable(CommandTable):
    """
    The standard, global command table.
    """
    commands = [
        general_cmds.CmdCommands(),
        general_cmds.CmdCompute(),
        general_cmds.CmdIndex(),
        general_cmds.CmdMargin(),
        general_cmds.CmdStabilize(),
        general_cmds.CmdSweep(),
        general_cmds.CmdVerify(),
    ]
