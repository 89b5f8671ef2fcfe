from src.utils.test_utils import NuGapTestCase
from src.cli.commands.parser import CommandParser, ParsedCommand
from src.cli.commands.cmdtable import CommandTable
from src.cli.commands.command import BaseCommand
from src.cli.commands.exceptions import (
    EXIT_USAGE, CommandError, DuplicateCommandException)


class CommandTableTests(NuGapTestCase):

    def setUp(self):
        super(CommandTableTests, self).setUp()
        self.table = CommandTable()

    def test_add_and_lookup(self):
        """
        A fake command is added to the command table, we perform some
        lookups.
        """
        cmd = BaseCommand()
        cmd.name = 'compute'
        cmd.aliases = ['nu']
        self.table.add_command(cmd)

        self.assertIs(self.table.match_name('compute'), cmd)
        self.assertIs(self.table.match_alias('nu'), cmd)

        # As if a user typed 'nugap compute'.
        parsed = ParsedCommand('compute', {}, [])
        self.assertIs(self.table.lookup_command(parsed), cmd)
        parsed = ParsedCommand('nu', {}, [])
        self.assertIs(self.table.lookup_command(parsed), cmd)
        parsed.command_str = 'invalid'
        self.assertEqual(self.table.lookup_command(parsed), None)

    def test_add_duplicate_name(self):
        cmd = BaseCommand()
        cmd.name = 'test'
        self.table.add_command(cmd)

        cmd2 = BaseCommand()
        cmd2.name = 'test'
        self.assertRaises(DuplicateCommandException, self.table.add_command, cmd2)

    def test_add_duplicate_alias(self):
        cmd = BaseCommand()
        cmd.name = 'cmd'
        cmd.aliases = ['l', 't']
        self.table.add_command(cmd)

        cmd2 = BaseCommand()
        cmd2.name = 'cmd2'
        cmd2.aliases = ['g', 't']
        self.assertRaises(DuplicateCommandException, self.table.add_command, cmd2)
        # Nothing of the rejected command made it in.
        self.assertIsNone(self.table.match_name('cmd2'))
        self.assertIsNone(self.table.match_alias('g'))

    def test_suggest(self):
        for name in ('compute', 'sweep', 'verify'):
            cmd = BaseCommand()
            cmd.name = name
            self.table.add_command(cmd)
        self.assertEqual(self.table.suggest('comptue'), 'compute')
        self.assertEqual(self.table.suggest('verfy'), 'verify')
        self.assertIsNone(self.table.suggest('zzzzzzzz'))
        self.assertEqual(self.table.names(), ['compute', 'sweep', 'verify'])


class CommandParserTests(NuGapTestCase):

    def setUp(self):
        super(CommandParserTests, self).setUp()
        self.parser = CommandParser()

    def test_simple_command(self):
        parsed = self.parser.parse(['verify'])
        self.assertIsInstance(parsed, ParsedCommand)
        self.assertEqual(parsed.command_str, 'verify')
        self.assertEqual(parsed.arguments, [])
        self.assertEqual(parsed.switches, {})

    def test_command_with_arguments(self):
        parsed = self.parser.parse(['compute', 'diffusion:a=0.5', 'diffusion:a=0.75'])
        self.assertEqual(parsed.command_str, 'compute')
        self.assertEqual(parsed.arguments, ['diffusion:a=0.5', 'diffusion:a=0.75'])
        self.assertEqual(parsed.argument_string, 'diffusion:a=0.5 diffusion:a=0.75')

    def test_switches(self):
        parsed = self.parser.parse([
            '--grid-n', '512', 'compute', '--plant1=retarded:delta=0',
            '--sweep', 'retarded:delta=0.05', '--format', 'csv'])
        self.assertEqual(parsed.command_str, 'compute')
        self.assertEqual(parsed.arguments, ['retarded:delta=0.05'])
        self.assertEqual(parsed.switches, {
            'grid-n': '512', 'plant1': 'retarded:delta=0', 'sweep': True,
            'format': 'csv'})
        self.assertEqual(parsed.switch('out'), None)
        self.assertEqual(parsed.switch('out', '-'), '-')

    def test_negative_values(self):
        """
        Values are taken as-is, even when they look like something else.
        """
        parsed = self.parser.parse(['stabilize', 'retarded:delta=0',
                                    '--controller', 'gain:k=-2'])
        self.assertEqual(parsed.switch('controller'), 'gain:k=-2')

    def test_double_dash(self):
        parsed = self.parser.parse(['compute', '--', '--odd', 'x'])
        self.assertEqual(parsed.arguments, ['--odd', 'x'])

    def test_errors(self):
        self.assertRaises(CommandError, self.parser.parse, [])
        self.assertRaises(CommandError, self.parser.parse, ['--sweep'])
        self.assertRaises(CommandError, self.parser.parse, ['compute', '--bogus'])
        self.assertRaises(CommandError, self.parser.parse, ['compute', '--out'])
        self.assertRaises(CommandError, self.parser.parse, ['compute', '--sweep=1'])
        try:
            self.parser.parse(['compute', '--bogus'])
        except CommandError as e:
            self.assertEqual(e.exit_code, EXIT_USAGE)
            self.assertIn('--bogus', e.message)
