"""
The nugap commands.
"""

from src.cli.commands.command import (
    EXIT_CONDITION_FAILED, EXIT_NUMERIC, EXIT_OK, BaseCommand)
from src.cli.commands.exceptions import CommandError
from src.cli.output import render_csv, render_json, render_sweep_csv
from src.cli.verify_suite import run_checks
from src.index.pair import index_of_pair
from src.numetric.chordal import kappa_distance
from src.numetric.metric import nu_metric
from src.numetric.positivity import (
    ASYMPTOTIC_FLOOR, asymptotic_margin, coprimeness_margin, re_positivity_check)
from src.plants.specs import default_factorizations, parse_plant_spec
from src.stability.exceptions import NominalLoopUnstable
from src.stability.loop import closed_loop_check
from src.stability.probe import robustness_probe

# Names the winding index criterion in index reports.
INDEX_CRITERION = 'radius-stabilization'


def _plants_json(plants):
    return [F.label for F in plants]


class CmdCompute(BaseCommand):
    """
    The nu-metric between two plants.

    Exits 2 when the distance is 1 because the winding condition failed.
    """

    name = 'compute'
    aliases = ['nu']
    usage = 'compute <plant1> <plant2> [--sweep] [--format json|csv]'
    formats = ('json', 'csv')

    def func(self, invoker, parsed_command):
        cfg = self._get_config(parsed_command)
        fmt = self._get_format(parsed_command)
        plants = self._build_plants(invoker, self._get_specs(parsed_command, 2, 2))
        sweep = fmt == 'csv' or bool(parsed_command.switch('sweep'))

        report = nu_metric(plants[0], plants[1], cfg, sweep=sweep)
        for flag in report.flags:
            invoker.warn('%s vs %s: %s' % (plants[0].label, plants[1].label, flag))

        if fmt == 'csv':
            text = render_sweep_csv(report.sweep)
        else:
            data = report.to_json()
            data['plants'] = _plants_json(plants)
            data['config'] = cfg.as_dict()
            text = render_json(data)
        invoker.emit_to(text, parsed_command.switch('out'))
        return EXIT_OK if report.condition_held else EXIT_CONDITION_FAILED


class CmdSweep(BaseCommand):
    """
    The chordal density over the axis grid, as ``y,kappa`` rows.
    """

    name = 'sweep'
    usage = 'sweep <plant1> <plant2> [--format csv|json] [--out path]'
    formats = ('csv', 'json')

    def func(self, invoker, parsed_command):
        cfg = self._get_config(parsed_command)
        fmt = self._get_format(parsed_command)
        plants = self._build_plants(invoker, self._get_specs(parsed_command, 2, 2))

        result = kappa_distance(plants[0], plants[1], cfg, sweep=True)
        if result.estimate.at_contour_end:
            invoker.warn('supremum sits on the contour end at y=%g' % result.argmax)

        if fmt == 'csv':
            text = render_sweep_csv(result.sweep)
        else:
            text = render_json({
                'plants': _plants_json(plants),
                'kappa': result.value,
                'kappa_argmax_y': result.argmax,
                'sweep': [list(row) for row in result.sweep],
            })
        invoker.emit_to(text, parsed_command.switch('out'))
        return EXIT_OK


class CmdIndex(BaseCommand):
    """
    Winding report for the pair function of two plants.
    """

    name = 'index'
    usage = 'index <plant1> <plant2> [--radii r1,r2,...] [--circle-n N]'

    def func(self, invoker, parsed_command):
        cfg = self._get_config(parsed_command)
        self._get_format(parsed_command)
        plants = self._build_plants(invoker, self._get_specs(parsed_command, 2, 2))

        report = index_of_pair(plants[0], plants[1], cfg)
        data = report.to_json()
        data['criterion'] = INDEX_CRITERION
        data['holds'] = report.holds
        data['flags'] = list(report.flags)
        data['plants'] = _plants_json(plants)
        invoker.emit_to(render_json(data), parsed_command.switch('out'))
        return EXIT_OK


class CmdMargin(BaseCommand):
    """
    Coprimeness margins and the large-frequency margin of each plant. With
    two plants, also the real part check of their pair function.
    """

    name = 'margin'
    usage = 'margin <plant> [<plant2>]'

    def func(self, invoker, parsed_command):
        cfg = self._get_config(parsed_command)
        self._get_format(parsed_command)
        plants = self._build_plants(invoker, self._get_specs(parsed_command, 1, 2))

        rows = []
        for F in plants:
            margin = coprimeness_margin(F, cfg)
            asymptotic = asymptotic_margin(F, cfg)
            rows.append({
                'plant': F.label,
                'margin': margin.value,
                'argmin_y': margin.argmax,
                'asymptotic_margin': asymptotic.value,
                'asymptotic_ok': asymptotic.value >= ASYMPTOTIC_FLOOR,
            })
        data = {'plants': rows}
        if len(plants) == 2:
            data['positivity'] = re_positivity_check(
                plants[0], plants[1], cfg=cfg).to_json()
        invoker.emit_to(render_json(data), parsed_command.switch('out'))
        return EXIT_OK


class CmdStabilize(BaseCommand):
    """
    Closed-loop check of a plant under ``--controller``. Further plant specs
    are neighbours for an empirical robustness probe.

    Exits 2 when the controller doesn't stabilize the plant.
    """

    name = 'stabilize'
    usage = 'stabilize <plant> --controller <spec> [<neighbour> ...]'

    def func(self, invoker, parsed_command):
        cfg = self._get_config(parsed_command)
        self._get_format(parsed_command)
        controller_text = parsed_command.switch('controller')
        if not controller_text:
            raise CommandError('stabilize needs --controller <spec>')
        specs = self._get_specs(parsed_command, 1)
        plants = self._build_plants(invoker, specs)
        controller = parse_plant_spec(controller_text, controller=True).build()
        out_path = parsed_command.switch('out')

        if len(plants) == 1:
            loop = closed_loop_check(plants[0], controller, cfg)
            invoker.emit_to(render_json(loop.to_json()), out_path)
            return EXIT_OK if loop.stable else EXIT_CONDITION_FAILED

        try:
            probe = robustness_probe(plants[0], controller, plants[1:], cfg)
        except NominalLoopUnstable as e:
            invoker.warn(e.message)
            invoker.emit_to(render_json(e.report.to_json()), out_path)
            return EXIT_CONDITION_FAILED
        invoker.emit_to(render_json(probe.to_json()), out_path)
        return EXIT_OK


class CmdVerify(BaseCommand):
    """
    Runs the built-in property suite. Exits 0 only if every check passes.
    """

    name = 'verify'
    usage = 'verify [<plant> ...] [--grid-n N] [--format table|json|csv]'
    formats = ('table', 'json', 'csv')

    def func(self, invoker, parsed_command):
        cfg = self._get_config(parsed_command)
        fmt = self._get_format(parsed_command)
        specs = self._get_specs(parsed_command, 0)
        warnings = []
        for spec in specs:
            warnings.extend(spec.warnings())
        for warning in warnings:
            invoker.warn(warning)
        plants = [spec.build() for spec in specs] or default_factorizations()

        results = run_checks(cfg, plants)
        if fmt == 'json':
            text = render_json({
                'checks': [r.to_json() for r in results],
                'warnings': warnings,
                'passed': all(r.passed for r in results),
            })
        elif fmt == 'csv':
            text = render_csv(('check', 'passed', 'detail'),
                              ((r.name, r.passed, r.detail) for r in results))
        else:
            text = self._table(results, warnings)
        invoker.emit_to(text, parsed_command.switch('out'))
        return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC

    def _table(self, results, warnings):
        width = max(len(r.name) for r in results)
        lines = [self._get_header_str('verify')]
        for r in results:
            lines.append('%s  %s  %s' % (
                'PASS' if r.passed else 'FAIL', r.name.ljust(width), r.detail))
        for warning in warnings:
            lines.append('WARN  %s' % warning)
        lines.append(self._get_footer_str())
        lines.append('%d of %d checks passed' % (
            sum(r.passed for r in results), len(results)))
        return '\n'.join(lines) + '\n'


class CmdCommands(BaseCommand):
    """
    Lists the available commands.
    """

    name = 'commands'
    aliases = ['help']

    usage = 'commands'

    def func(self, invoker, parsed_command):
        lines = [self._get_header_str('commands')]
        for cmd in invoker.command_table.get_commands():
            alias_str = ' (%s)' % ', '.join(cmd.aliases) if cmd.aliases else ''
            lines.append('%s%s: %s' % (cmd.name, alias_str, cmd.usage))
        lines.append(self._get_footer_str())
        invoker.emit_to('\n'.join(lines) + '\n', parsed_command.switch('out'))
        return EXIT_OK
