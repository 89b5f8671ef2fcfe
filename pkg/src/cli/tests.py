"""
End-to-end runs of the command line tool, output captured.
"""

import csv
import io
import json
import os
import tempfile

from src.utils.test_utils import NuGapTestCase, fast_config
from src.cli import main
from src.cli.commands.command import (
    EXIT_CONDITION_FAILED, EXIT_NUMERIC, EXIT_OK)
from src.cli.commands.exceptions import EXIT_USAGE
from src.cli.general import INDEX_CRITERION
from src.cli.output import render_csv, render_json
from src.cli.verify_suite import CHECKS, run_checks
from src.plants.diffusion import diffusion_factorization
from src.utils import logger

# Matches fast_config.
FAST = ['--grid-n', '1024', '--circle-n', '2048', '--refine-iters', '40']
DIFFUSION_PAIR = ['diffusion:a=0.5', 'diffusion:a=0.75']
DELAY_MISMATCH = ['delay_pole:T=1,a=1', 'delay_pole:T=2,a=1']
UNSTABLE_VS_STABLE = ['expr:n=1/(s+1);d=(s-1)/(s+1)', 'expr:n=1/(s+1);d=1']


class CliTestCase(NuGapTestCase):

    def run_cli(self, *argv):
        """
        :returns: ``(exit_code, stdout_text, stderr_text)``
        """
        stdout = io.StringIO()
        stderr = io.StringIO()
        code = main(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()


class ComputeTests(CliTestCase):

    def test_diffusion_pair(self):
        code, out, err = self.run_cli('compute', *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        data = json.loads(out)
        self.assertTrue(data['condition_held'])
        self.assertTrue(0.10 <= data['d'] <= 0.14, data['d'])
        self.assertEqual(data['plants'], ['diffusion(a=0.5)', 'diffusion(a=0.75)'])
        self.assertEqual(data['config']['grid.n'], 1024)
        self.assertNotIn('sweep', data)

    def test_same_plant(self):
        code, out, err = self.run_cli('compute', 'diffusion:a=0.5',
                                      'diffusion:a=0.5', *FAST)
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['d'], 0.0)

    def test_flags_instead_of_positional(self):
        code, out, err = self.run_cli(
            'nu', '--plant1', DIFFUSION_PAIR[0], '--plant2', DIFFUSION_PAIR[1], *FAST)
        self.assertEqual(code, EXIT_OK, err)
        self.assertTrue(0.10 <= json.loads(out)['d'] <= 0.14)

    def test_condition_failure_exit_code(self):
        code, out, err = self.run_cli('compute', *(UNSTABLE_VS_STABLE + FAST))
        self.assertEqual(code, EXIT_CONDITION_FAILED)
        data = json.loads(out)
        self.assertEqual(data['d'], 1.0)
        self.assertFalse(data['condition_held'])

    def test_delay_mismatch(self):
        code, out, err = self.run_cli('compute', *(DELAY_MISMATCH + FAST))
        self.assertEqual(code, EXIT_CONDITION_FAILED)
        data = json.loads(out)
        self.assertEqual(data['d'], 1.0)
        self.assertFalse(data['condition_held'])
        self.assertIn('not-invertible', data['flags'])
        self.assertFalse(data['index']['invertible'])

    def test_deterministic(self):
        first = self.run_cli('compute', *(DIFFUSION_PAIR + FAST))
        second = self.run_cli('compute', *(DIFFUSION_PAIR + FAST))
        self.assertEqual(first[1], second[1])

    def test_out_file(self):
        path = os.path.join(tempfile.mkdtemp(), 'result.json')
        code, out, err = self.run_cli('compute', '--out', path,
                                      *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(out, '')
        with open(path) as fobj:
            self.assertTrue(0.10 <= json.load(fobj)['d'] <= 0.14)

    def test_usage_errors(self):
        cases = [
            ['compute', 'diffusion:a=0.5'],
            ['compute', 'difusion:a=0.5', 'diffusion:a=0.75'],
            ['compute', 'diffusion:a=1.5', 'diffusion:a=0.75'],
            ['compute', 'expr:n=1/(s+;d=1', 'diffusion:a=0.75'],
            ['compute', 'diffusion:a=0.5', 'diffusion:a=0.75', '--grid-n', 'many'],
            ['compute', 'diffusion:a=0.5', 'diffusion:a=0.75', '--grid-n', '8'],
            ['compute', 'diffusion:a=0.5', 'diffusion:a=0.75', '--radii', '0.5,2'],
            ['compute', 'diffusion:a=0.5', 'diffusion:a=0.75', '--format', 'xml'],
            ['compute', 'diffusion:a=0.5', 'diffusion:a=0.75', '--bogus'],
        ]
        for argv in cases:
            code, out, err = self.run_cli(*argv)
            self.assertEqual(code, EXIT_USAGE, (argv, err))
            self.assertEqual(out, '')
            self.assertIn('error:', err)

    def test_family_suggestion(self):
        code, out, err = self.run_cli('compute', 'difusion:a=0.5', 'diffusion:a=0.75')
        self.assertIn("'diffusion'", err)

    def test_unknown_command(self):
        code, out, err = self.run_cli('comptue', *DIFFUSION_PAIR)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("Did you mean 'compute'?", err)

    def test_numeric_failure(self):
        """
        Every sample pole-hits: 1/0 is no plant at all.
        """
        code, out, err = self.run_cli(
            'compute', 'expr:n=1/(s-s);d=1', 'diffusion:a=0.5', *FAST)
        self.assertIn(code, (EXIT_NUMERIC, EXIT_USAGE))
        self.assertEqual(out, '')


class SweepTests(CliTestCase):

    def parse_csv(self, text):
        rows = list(csv.reader(io.StringIO(text)))
        self.assertEqual(rows[0], ['y', 'kappa'])
        return [(float(y), float(k)) for y, k in rows[1:]]

    def test_diffusion_pair(self):
        code, out, err = self.run_cli('sweep', *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        rows = self.parse_csv(out)
        self.assertEqual(len(rows), 2048)
        peak = max(k for _, k in rows)
        self.assertTrue(0.10 <= peak <= 0.14, peak)
        ys = [y for y, _ in rows]
        self.assertEqual(ys, sorted(ys))

    def test_identical_plants(self):
        code, out, err = self.run_cli('sweep', 'diffusion:a=0.5',
                                      'diffusion:a=0.5', *FAST)
        self.assertEqual(code, EXIT_OK, err)
        self.assertTrue(all(k == 0.0 for _, k in self.parse_csv(out)))

    def test_delay_mismatch(self):
        code, out, err = self.run_cli('sweep', *(DELAY_MISMATCH + FAST))
        self.assertEqual(code, EXIT_OK, err)
        self.assertTrue(max(k for _, k in self.parse_csv(out)) >= 0.99)

    def test_round_trip_floats(self):
        """
        Every written y parses back to the exact grid value.
        """
        code, out, err = self.run_cli('sweep', '--format', 'json',
                                      *(DIFFUSION_PAIR + FAST))
        data = json.loads(out)
        code, csv_out, err = self.run_cli('sweep', *(DIFFUSION_PAIR + FAST))
        from_csv = [y for y, _ in self.parse_csv(csv_out)]
        self.assertEqual(from_csv, [row[0] for row in data['sweep']])

    def test_compute_csv(self):
        code, out, err = self.run_cli('compute', '--format', 'csv',
                                      *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(len(self.parse_csv(out)), 2048)


class IndexTests(CliTestCase):

    def test_diffusion_pair(self):
        code, out, err = self.run_cli('index', *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        data = json.loads(out)
        self.assertEqual(data['criterion'], INDEX_CRITERION)
        self.assertEqual(data['index'], 0)
        self.assertTrue(data['holds'])
        self.assertEqual(data['radii'], [0.9, 0.99, 0.999, 0.9999])
        self.assertEqual(len(data['windings']), 4)

    def test_radii(self):
        code, out, err = self.run_cli('index', '--radii', '0.9,0.99',
                                      *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['radii'], [0.9, 0.99])

    def test_verbose_starts_logging(self):
        started = []
        self.patch(logger, 'start_logging', started.append)
        code, out, err = self.run_cli('index', '--verbose', '--radii', '0.9,0.99',
                                      *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(len(started), 1)
        self.assertTrue(json.loads(out)['holds'])

    def test_unstable_against_stable(self):
        code, out, err = self.run_cli('index', *(UNSTABLE_VS_STABLE + FAST))
        self.assertEqual(code, EXIT_OK, err)
        data = json.loads(out)
        self.assertFalse(data['holds'])
        self.assertTrue(data['flags'])


class MarginTests(CliTestCase):

    def test_one_plant(self):
        code, out, err = self.run_cli('margin', 'diffusion:a=0.5', *FAST)
        self.assertEqual(code, EXIT_OK, err)
        row = json.loads(out)['plants'][0]
        self.assertTrue(0.4 * 0.25 < row['margin'] < 0.25, row)
        self.assertTrue(row['asymptotic_ok'])
        self.assertNotIn('positivity', json.loads(out))

    def test_two_plants(self):
        code, out, err = self.run_cli('margin', *(DIFFUSION_PAIR + FAST))
        self.assertEqual(code, EXIT_OK, err)
        data = json.loads(out)
        self.assertEqual(len(data['plants']), 2)
        self.assertTrue(data['positivity']['holds'])

    def test_parameter_warning(self):
        code, out, err = self.run_cli('margin', 'diffusion:a=0.9999', *FAST)
        self.assertIn('warning:', err)
        self.assertIn('a=0.9999', err)


class StabilizeTests(CliTestCase):

    def test_retarded_with_gain(self):
        code, out, err = self.run_cli('stabilize', 'retarded:delta=0',
                                      '--controller', 'gain:k=-2', *FAST)
        self.assertEqual(code, EXIT_OK, err)
        self.assertTrue(json.loads(out)['stable'])

    def test_zero_gain_unstable(self):
        code, out, err = self.run_cli('stabilize', UNSTABLE_VS_STABLE[0],
                                      '--controller', 'gain:k=0', *FAST)
        self.assertEqual(code, EXIT_CONDITION_FAILED)
        self.assertFalse(json.loads(out)['stable'])

    def test_probe(self):
        code, out, err = self.run_cli(
            'stabilize', 'retarded:delta=0', 'retarded:delta=0.05',
            'retarded:delta=-0.05', '--controller', 'gain:k=-2',
            '--grid-n', '512', '--circle-n', '1024', '--refine-iters', '20')
        self.assertEqual(code, EXIT_OK, err)
        data = json.loads(out)
        self.assertEqual(data['label'], 'empirical')
        self.assertEqual(len(data['results']), 2)
        self.assertIsNone(data['frontier'])

    def test_probe_unstable_nominal(self):
        code, out, err = self.run_cli(
            'stabilize', UNSTABLE_VS_STABLE[0], UNSTABLE_VS_STABLE[1],
            '--controller', 'gain:k=0', *FAST)
        self.assertEqual(code, EXIT_CONDITION_FAILED)
        self.assertFalse(json.loads(out)['stable'])

    def test_missing_controller(self):
        code, out, err = self.run_cli('stabilize', 'retarded:delta=0')
        self.assertEqual(code, EXIT_USAGE)

    def test_controller_family_only_for_controllers(self):
        code, out, err = self.run_cli('compute', 'gain:k=1', 'retarded:delta=0')
        self.assertEqual(code, EXIT_USAGE)


class VerifySuiteTests(CliTestCase):
    """
    The suite runs on reduced resolution here; the default run is the one
    users see.
    """

    def test_all_pass(self):
        results = run_checks(self.cfg, [diffusion_factorization(0.5)])
        self.assertEqual([r.name for r in results], list(CHECKS))
        for result in results:
            self.assertTrue(result.passed, (result.name, result.detail))

    def run_one(self, name, plants=None):
        result, = run_checks(self.cfg, plants or [diffusion_factorization(0.5)], [name])
        self.assertEqual(result.name, name)
        return result

    def test_index_conjugation(self):
        result = self.run_one('index-conjugation')
        self.assertTrue(result.passed, result.detail)
        self.assertIn('1 vs -1', result.detail)
        self.assertIn('2 vs -2', result.detail)

    def test_index_local_constancy(self):
        result = self.run_one('index-local-constancy')
        self.assertTrue(result.passed, result.detail)
        self.assertIn('[2, 2, 2, 2]', result.detail)

    def test_index_positivity(self):
        result = self.run_one('index-positivity')
        self.assertTrue(result.passed, result.detail)
        self.assertIn('(s+2)/(s+1) -> 0', result.detail)

    def test_metric_axioms_on_delays(self):
        result = self.run_one('metric-axioms-delay')
        self.assertTrue(result.passed, result.detail)
        self.assertIn('triangle True', result.detail)

    def test_re_positivity(self):
        result = self.run_one('re-positivity')
        self.assertTrue(result.passed, result.detail)

    def test_boundedness(self):
        result = self.run_one('boundedness', [diffusion_factorization(0.2),
                                               diffusion_factorization(0.9)])
        self.assertTrue(result.passed, result.detail)
        self.assertTrue(result.detail.startswith('a=0.2: '), result.detail)
        self.assertIn('a=0.9: ', result.detail)

    def test_stable_forms(self):
        result = self.run_one('stable-forms')
        self.assertTrue(result.passed, result.detail)

    def test_degraded_grid(self):
        cfg = fast_config(grid_n=8)
        results = dict((r.name, r) for r in run_checks(
            cfg, [diffusion_factorization(0.5)], ['resolution-stability']))
        self.assertFalse(results['resolution-stability'].passed)
        self.assertIn('BadGridRange', results['resolution-stability'].detail)

    def test_command_degraded_grid(self):
        code, out, err = self.run_cli('verify', '--grid-n', '8', '--format', 'json')
        self.assertEqual(code, EXIT_NUMERIC)
        data = json.loads(out)
        self.assertFalse(data['passed'])
        self.assertEqual([c['check'] for c in data['checks']], list(CHECKS))
        failed = [c['check'] for c in data['checks'] if not c['passed']]
        self.assertIn('resolution-stability', failed)

    def test_parameter_warning_surfaced(self):
        results = run_checks(self.cfg, [diffusion_factorization(0.999999)],
                             ['margins'])
        self.assertTrue(results[0].passed, results[0].detail)
        code, out, err = self.run_cli(
            'verify', 'diffusion:a=0.999999', '--grid-n', '8', '--format', 'json')
        self.assertIn('a=0.999999', err)
        self.assertEqual(len(json.loads(out)['warnings']), 1)


class CommandsTests(CliTestCase):

    def test_listing(self):
        code, out, err = self.run_cli('commands')
        self.assertEqual(code, EXIT_OK)
        for name in ('compute', 'sweep', 'index', 'margin', 'stabilize', 'verify'):
            self.assertIn(name + ' ', out)


class OutputTests(NuGapTestCase):

    def test_json_nan(self):
        text = render_json({'b': float('nan'), 'a': [float('inf'), 1.5]})
        self.assertEqual(json.loads(text), {'a': [None, 1.5], 'b': None})
        self.assertTrue(text.index('"a"') < text.index('"b"'))

    def test_csv_floats(self):
        text = render_csv(('y', 'kappa'), [(0.1, 1e-300), (2.0, 1 / 3.0)])
        self.assertEqual(text, 'y,kappa\n0.1,1e-300\n2.0,0.3333333333333333\n')
