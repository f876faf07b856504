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
    non_negative_int
)
from pwl.extended import ExtendedBeliefSearch
from pwl.input import load_extended_system, read_file
from pwl.output import plan_to_dict, printf, PrintType, write_json


def run_ext_synthesize(args):
    """Searches for a satisfactory plan of an extended system.

    Returns:
        0 if a plan was found, 1 if none exists within the horizon.
    """
    check_args(args)

    es = load_extended_system(read_file(args.system))
    search = ExtendedBeliefSearch(es, args.horizon)
    plan = search.plan()

    printf('Explored {} nodes'.format(search.explored),
           print_type=PrintType.NORMAL)

    if plan is None:
        printf('No satisfactory plan within horizon {}'.format(args.horizon),
               print_type=PrintType.WARNING | PrintType.INFO_LOG)
        return EXIT_NEGATIVE

    write_json(plan_to_dict(plan, es.states, es.actions), args.out)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl ext-synthesize')
    parser.add_argument(
        '--system',
        required=True,
        help='The extended system file.'
    )
    parser.add_argument(
        '--horizon',
        required=True,
        type=non_negative_int,
        help='Maximum branch length.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_ext_synthesize(args)
