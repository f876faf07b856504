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
    load_system_file
)
from pwl.output import plan_to_dict, write_json
from pwl.shrinker import shrink


def run_shrink(args):
    """Shrinks a satisfactory plan so no branch exceeds s * t.

    Raises:
        NotSatisfactoryError: If the input plan is not satisfactory.
    """
    check_args(args)

    system = load_system_file(args.system)
    plan = load_plan_file(args.plan, system.states, system.actions)
    shrunk = shrink(system, plan)

    write_json(plan_to_dict(shrunk, system.states, system.actions), args.out)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl shrink')
    parser.add_argument(
        '--system',
        required=True,
        help='The system file.'
    )
    parser.add_argument(
        '--plan',
        required=True,
        help='The satisfactory plan file to shrink.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_shrink(args)
