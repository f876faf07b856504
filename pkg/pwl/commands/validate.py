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
from pwl.output import printf, PrintType, write_json
from pwl.plan import canonicalize_plan, check_plan, longest_branch


def validate(args):
    """Validates a system and, optionally, a plan for it.

    Args:
        args: The parsed command-line arguments.

    Returns:
        0 if the inputs are valid.

    Raises:
        PWLBaseException: If an input is malformed or invalid.
    """
    check_args(args)

    system = load_system_file(args.system)
    summary = {
        'states': system.t,
        'actions': len(system.actions),
        'behaviors': system.s,
        'goal': [system.states[q] for q in sorted(system.goal)],
        'completeness_bound': system.s * system.t
    }

    if args.plan:
        plan = load_plan_file(args.plan, system.states, system.actions)
        if args.horizon is not None:
            plan = plan.with_horizon(args.horizon)
        check_plan(system, plan)

        canonical = canonicalize_plan(system, plan)
        summary['plan'] = {
            'horizon': plan.horizon,
            'entries': len(plan),
            'canonical_entries': len(canonical),
            'entry_bound': system.s * plan.horizon,
            'longest_branch': longest_branch(system, canonical)
        }

    printf('{} is valid'.format(args.system),
           print_type=PrintType.NORMAL | PrintType.INFO_LOG)
    write_json(summary, args.out)

    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl validate')
    parser.add_argument(
        '--system',
        required=True,
        help='The system file to validate.'
    )
    parser.add_argument(
        '--plan',
        help='A plan file to validate against the system.'
    )
    parser.add_argument(
        '--horizon',
        type=non_negative_int,
        help='Overrides the plan horizon.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return validate(args)
