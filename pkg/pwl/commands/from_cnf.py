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
    check_args
)
from pwl.input import parse_dimacs, read_file
from pwl.output import system_to_dict, write_json
from pwl.reductions import system_from_cnf


def from_cnf(args):
    """Writes the plan-existence system of a DIMACS 3-CNF formula."""
    check_args(args)

    cnf = parse_dimacs(read_file(args.cnf))
    write_json(system_to_dict(system_from_cnf(cnf)), args.out)

    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl from-cnf')
    parser.add_argument(
        '--cnf',
        required=True,
        help='The DIMACS CNF file, three distinct variables per clause.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return from_cnf(args)
