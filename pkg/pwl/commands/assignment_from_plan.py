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
    load_plan_file
)
from pwl.errors import NotSatisfactoryError
from pwl.input import parse_dimacs, read_file
from pwl.output import printf, PrintType, write_json
from pwl.reductions import assignment_from_plan, system_from_cnf


def run_assignment_from_plan(args):
    """Reads the satisfying assignment a plan for a reduction commits to.

    Returns:
        0 with the assignment, 1 if the plan is not satisfactory.
    """
    check_args(args)

    cnf = parse_dimacs(read_file(args.cnf))
    system = system_from_cnf(cnf)
    plan = load_plan_file(args.plan, system.states, system.actions)

    try:
        assignment = assignment_from_plan(cnf, plan, system)
    except NotSatisfactoryError as err:
        printf(str(err), print_type=PrintType.WARNING | PrintType.INFO_LOG)
        return EXIT_NEGATIVE

    write_json({'assignment': list(assignment)}, args.out)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl assignment-from-plan')
    parser.add_argument(
        '--cnf',
        required=True,
        help='The DIMACS CNF file.'
    )
    parser.add_argument(
        '--plan',
        required=True,
        help='A plan file for the reduction system of the formula.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_assignment_from_plan(args)
