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

from pwl.commands.common import (
    EXIT_SUCCESS,
    add_common_arguments,
    add_out_argument,
    check_args,
    load_plan_file,
    load_system_file,
    non_negative_int
)
from pwl.errors import ValidationError
from pwl.output import trace_to_dict, tree_to_dict, write_json
from pwl.plan import check_plan, decision_tree_view
from pwl.verifier import simulate


def run_simulate(args):
    """Prints the traces of a plan, or its decision tree.

    Args:
        args: The parsed command-line arguments.

    Returns:
        0 if successful.
    """
    check_args(args)

    system = load_system_file(args.system)
    plan = load_plan_file(args.plan, system.states, system.actions)
    check_plan(system, plan)

    names = system.behavior_names
    if args.tree:
        tree = decision_tree_view(system, plan)
        write_json({'tree': tree_to_dict(tree, system.states, system.actions,
                                         names)}, args.out)
        return EXIT_SUCCESS

    if args.behavior is None:
        behaviors = range(system.s)
    elif args.behavior in names:
        behaviors = [names.index(args.behavior)]
    else:
        raise ValidationError('unknown behavior {!r}'.format(args.behavior))

    traces = [
        trace_to_dict(simulate(system, plan, b, args.horizon), system.states,
                      system.actions, names)
        for b in behaviors
    ]
    write_json({'traces': traces}, args.out)

    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl simulate')
    parser.add_argument(
        '--system',
        required=True,
        help='The system file.'
    )
    parser.add_argument(
        '--plan',
        required=True,
        help='The plan file to simulate.'
    )
    parser.add_argument(
        '--behavior',
        help='Only simulate the named behavior.'
    )
    parser.add_argument(
        '--horizon',
        type=non_negative_int,
        help='Maximum number of actions. Defaults to the plan horizon.'
    )
    parser.add_argument(
        '--tree',
        default=False,
        action='store_true',
        help='Prints the decision tree view instead of traces.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_simulate(args)
