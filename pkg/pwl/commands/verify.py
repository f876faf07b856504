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
    EXIT_NEGATIVE,
    EXIT_SUCCESS,
    add_common_arguments,
    add_out_argument,
    check_args,
    load_plan_file,
    load_system_file,
    non_negative_int,
    threshold
)
from pwl.output import printf, PrintType, verdict_to_dict, write_json
from pwl.verifier import verify


def run_verify(args):
    """Verifies a plan and reports every failing trace.

    Args:
        args: The parsed command-line arguments.

    Returns:
        0 if the plan is satisfactory, 1 otherwise.
    """
    check_args(args)

    system = load_system_file(args.system)
    plan = load_plan_file(args.plan, system.states, system.actions)
    verdict = verify(system, plan, args.horizon, args.threshold)

    write_json(verdict_to_dict(verdict, system.states, system.actions,
                               system.behavior_names), args.out)

    if not verdict.satisfactory:
        printf('Plan is not satisfactory: {} of {} behaviors fail'
               .format(len(verdict.failures), system.s),
               print_type=PrintType.WARNING | PrintType.INFO_LOG)
        return EXIT_NEGATIVE

    printf('Plan is satisfactory', print_type=PrintType.NORMAL)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl verify')
    parser.add_argument(
        '--system',
        required=True,
        help='The system file.'
    )
    parser.add_argument(
        '--plan',
        required=True,
        help='The plan file to verify.'
    )
    parser.add_argument(
        '--horizon',
        type=non_negative_int,
        help='Maximum number of actions. Defaults to the plan horizon.'
    )
    parser.add_argument(
        '--threshold',
        type=threshold,
        default=1.0,
        help='Required fraction of behaviors reaching the goal. Defaults '
             'to 1.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_verify(args)
