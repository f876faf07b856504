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
    check_args
)
from pwl.errors import ParseError, RestrictionUnsatisfiedError
from pwl.input import parse_dimacs, read_file
from pwl.output import plan_to_dict, printf, PrintType, write_json
from pwl.reductions import plan_from_assignment, system_from_cnf
from pwl.util import try_split


def parse_assignment(value):
    """Parses an assignment such as 1,0,0 or 100."""
    value = value.strip()
    bits = try_split(value) if ',' in value else list(value)
    if not bits or any(b not in ('0', '1') for b in bits):
        raise ParseError('assignment {!r} must be a string of bits'
                         .format(value))
    return tuple(int(b) for b in bits)


def run_plan_from_assignment(args):
    """Writes the unconditional plan of an assignment.

    Returns:
        0 if the assignment satisfies the formula, 1 otherwise.
    """
    check_args(args)

    cnf = parse_dimacs(read_file(args.cnf))
    system = system_from_cnf(cnf)

    try:
        plan = plan_from_assignment(cnf, parse_assignment(args.assignment),
                                    system)
    except RestrictionUnsatisfiedError as err:
        printf(str(err), print_type=PrintType.WARNING | PrintType.INFO_LOG)
        return EXIT_NEGATIVE

    write_json(plan_to_dict(plan, system.states, system.actions), args.out)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl plan-from-assignment')
    parser.add_argument(
        '--cnf',
        required=True,
        help='The DIMACS CNF file.'
    )
    parser.add_argument(
        '--assignment',
        required=True,
        help='Bits for v1..vn, e.g. 1,0,0.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_plan_from_assignment(args)
