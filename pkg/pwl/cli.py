# Copyright (c) 2019, UofL Computer Systems Lab.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without event the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.

import argparse
import importlib
from importlib import metadata

import colorama
import numpy

import pwl
from pwl.errors import UndefinedCommandError


_BUILTIN_COMMANDS = {
    'assignment-from-plan': 'pwl.commands.assignment_from_plan',
    'bench': 'pwl.commands.bench',
    'ext-synthesize': 'pwl.commands.ext_synthesize',
    'ext-verify': 'pwl.commands.ext_verify',
    'from-cnf': 'pwl.commands.from_cnf',
    'gen': 'pwl.commands.gen',
    'ma-verify': 'pwl.commands.ma_verify',
    'plan-from-assignment': 'pwl.commands.plan_from_assignment',
    'reduce-goals': 'pwl.commands.reduce_goals',
    'shrink': 'pwl.commands.shrink',
    'simulate': 'pwl.commands.simulate',
    'synthesize': 'pwl.commands.synthesize',
    'validate': 'pwl.commands.validate',
    'verify': 'pwl.commands.verify'
}


def _entry_points(group):
    eps = metadata.entry_points()
    if hasattr(eps, 'select'):
        return list(eps.select(group=group))
    return list(eps.get(group, []))


def _registered_commands(group='pwl.registered_commands'):
    """Retrieves the commands, built-in or registered for an entry point
    group.

    Built-in commands take precedence over registered ones with the same
    name.

    Args:
        group: The group.

    Returns:
        A dictionary mapping command name to a function loading its `main`.
    """
    commands = {ep.name: ep.load for ep in _entry_points(group)}

    for name, module in _BUILTIN_COMMANDS.items():
        commands[name] = (
            lambda module=module: importlib.import_module(module).main
        )

    return commands


def list_dependencies_and_versions():
    """Retrieves a list of package dependencies and their current versions.

    Returns:
        List of tuples containing package dependency name and version.
    """
    return [
        ('colorama', colorama.__version__),
        ('numpy', numpy.__version__)
    ]


def dep_versions():
    """Retrieves string of package dependencies.

    Returns:
        String of package dependencies and their current versions.
    """
    return ', '.join(
        '{}: {}'.format(*dependency)
        for dependency in list_dependencies_and_versions()
    )


def dispatch(argv):
    """Dispatches execution to the appropriate command.

    Args:
        argv: The command-line arguments.

    Returns:
        The exit code of the command.
    """
    registered_commands = _registered_commands()
    parser = argparse.ArgumentParser(prog='pwl', description=pwl.__summary__)
    parser.add_argument(
        '--version',
        action='version',
        version='%(prog)s versions {} ({})'.format(
            pwl.__version__,
            dep_versions()
        )
    )
    parser.add_argument(
        'command',
        help='One of: {}.'.format(', '.join(sorted(registered_commands)))
    )
    parser.add_argument(
        'args',
        help=argparse.SUPPRESS,
        nargs=argparse.REMAINDER
    )

    args = parser.parse_args(argv)

    if args.command not in registered_commands:
        raise UndefinedCommandError(
            'Command {} is not defined'.format(args.command)
        )

    main = registered_commands[args.command]()
    return main(args.args)
