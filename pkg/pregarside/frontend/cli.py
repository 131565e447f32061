#/bin/env python
import functools
import logging
import os

import click

from pregarside.amalgam.tree import format_tree
from pregarside.config import load_cfg
from pregarside.errors import PgkError
from pregarside.frontend.decision import (
    Session, coset_membership, monoid_membership, torsion_probe, word_problem)
from pregarside.frontend.preset import PRESETS
from pregarside.parabolic import (
    enumerate_spherical_parabolics, is_parabolic, spherical_simples)
from pregarside.presentation import check_graph_coincidence
from pregarside.word import format_positive, is_positive, parse_word, positive_part

LEVELS = ('WARNING', 'INFO', 'DEBUG')


# stands in for FILE when --preset names the presentation
PRESET_SOURCE = '<preset>'


def _atom_list(text: str) -> list[str]:
    return [atom for atom in text.replace(',', ' ').split() if atom]


def _names_preset(args) -> bool:
    for arg in args:
        if arg == '--':
            return False
        if arg == '--preset' or arg.startswith('--preset='):
            return True
        if arg.startswith('-p'):
            return True
    return False


class PresetCommand(click.Command):
    """Command whose leading FILE argument is dropped when ``--preset`` is given."""
    def parse_args(self, ctx, args):
        if _names_preset(args):
            args = [PRESET_SOURCE] + list(args)
        return super().parse_args(ctx, args)


def presentation_options(func):
    """Options shared by every subcommand: the presentation source and the search limits."""
    @click.argument('source', metavar='[FILE]', required=False)
    @click.option('--preset', '-p', type=click.Choice(PRESETS, case_sensitive=False),
        default=None, metavar='NAME',
        help=f'use a shipped presentation instead of FILE: {", ".join(PRESETS)}.')
    @click.option('--config-file', '-c',
        type=click.Path(exists=True, dir_okay=False, file_okay=True, readable=True, resolve_path=True),
        default=None,
        help='yaml configuration file overriding the defaults.')
    @click.option('--max-garside-len', type=click.IntRange(min=1), default=None,
        help='longest candidate Garside word per leaf, default 2|X|^2.')
    @click.option('--oracle-budget', type=click.IntRange(min=1), default=None,
        help='maximum number of words in one rewriting closure.')
    @click.option('--verbose', '-v', count=True, help='repeat for more logging.')
    @functools.wraps(func)
    def wrapper(source, preset, config_file, max_garside_len, oracle_budget, verbose, **kwargs):
        if source is None:
            raise click.UsageError('give a presentation FILE or --preset NAME')
        if preset is None and not os.path.isfile(source):
            raise click.BadParameter(f'no such file {source!r}', param_hint='FILE')
        overrides = []
        if max_garside_len is not None:
            overrides += ['garside.max_word_length', max_garside_len]
        if oracle_budget is not None:
            overrides += ['oracle.budget', oracle_budget]
        if kwargs.get('k') is not None:
            overrides += ['probe.k_max', kwargs['k']]
        try:
            cfg = load_cfg(config_file, overrides=overrides)
            level = LEVELS.index(cfg.logging.level) if cfg.logging.level in LEVELS else 0
            logging.basicConfig(level=LEVELS[min(level + verbose, len(LEVELS) - 1)])
            session = (Session.from_config(cfg, preset=preset) if preset
                       else Session.from_config(cfg, path=os.path.abspath(source)))
            return func(session, **kwargs)
        except PgkError as err:
            click.echo(f'error: {err}', err=True)
            click.get_current_context().exit(2)
    return wrapper


def _verdict(result: bool, exit_on_false: bool = True):
    click.echo('true' if result else 'false')
    if exit_on_false and not result:
        click.get_current_context().exit(1)


@click.group()
def main():
    """Word problems and parabolic cosets in preGarside monoids of FC type."""


@main.command(cls=PresetCommand)
@presentation_options
def check(session: Session):
    """Validate atoms and the coincidence of the complement graphs."""
    report = session.atom_report
    for atom, ok in report.verdicts.items():
        click.echo(f'atom {atom}: {"ok" if ok else "not an atom"}')
    coincide = check_graph_coincidence(session.cp)
    click.echo(f'graphs coincide: {"true" if coincide else "false"}')
    if not (report.all_atoms and coincide):
        click.get_current_context().exit(2)


@main.command(cls=PresetCommand)
@presentation_options
def tree(session: Session):
    """Print the FC tree."""
    click.echo(format_tree(session.tree))


@main.command(cls=PresetCommand)
@presentation_options
def simples(session: Session):
    """List the spherical parabolics and the simple elements."""
    handles = enumerate_spherical_parabolics(session.spec, session.cp, session.catalog)
    for handle in handles:
        click.echo(f'{handle} delta {format_positive(handle.delta_N)}')
    words = spherical_simples(handles, session.catalog)
    click.echo(f'{len(words)} simples')
    for word in words:
        click.echo('.'.join(word) if word else '1')


@main.command(cls=PresetCommand)
@presentation_options
@click.option('--atoms', '-X', required=True, help='comma or space separated atoms.')
def parabolic(session: Session, atoms: str):
    """Test whether a set of atoms generates a parabolic submonoid."""
    _verdict(is_parabolic(_atom_list(atoms), session.cp), exit_on_false=False)


@main.command(cls=PresetCommand)
@presentation_options
@click.option('--word', '-w', required=True, help='signed word, e.g. "a b- c".')
def nf(session: Session, word: str):
    """Print the canonical form of a word."""
    letters = parse_word(word)
    root = session.tree
    if is_positive(letters):
        click.echo(root.format_monoid(root.monoid_nf(positive_part(letters))))
    else:
        click.echo(root.format_group(root.group_nf(letters)))


@main.command(cls=PresetCommand)
@presentation_options
@click.argument('w1')
@click.argument('w2')
def eq(session: Session, w1: str, w2: str):
    """Decide whether two signed words are equal in the group."""
    _verdict(word_problem(parse_word(w1), parse_word(w2), session.tree))


@main.command(cls=PresetCommand)
@presentation_options
@click.argument('w')
def member(session: Session, w: str):
    """Decide whether a signed word represents a monoid element."""
    _verdict(monoid_membership(parse_word(w), session.tree))


@main.command(cls=PresetCommand)
@presentation_options
@click.option('--parabolic', '-P', 'atoms', required=True,
    help='atoms of the parabolic subgroup, comma or space separated.')
@click.argument('w')
def coset(session: Session, atoms: str, w: str):
    """Decide whether a signed word lies in the parabolic subgroup G(P)."""
    handle = session.parabolic(_atom_list(atoms))
    _verdict(coset_membership(parse_word(w), handle, session.tree))


@main.command(cls=PresetCommand)
@presentation_options
@click.option('--k', '-k', type=click.IntRange(min=2), default=None,
    help='largest power to test, default from the configuration.')
@click.argument('w')
def probe(session: Session, k: int, w: str):
    """Check that the powers 2..k of a word are nontrivial."""
    _verdict(torsion_probe(parse_word(w), session.cfg.probe.k_max, session.tree),
             exit_on_false=False)


if __name__ == '__main__':
    main()
