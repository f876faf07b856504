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
from pwl.input import load_multiagent_system, read_file
from pwl.multiagent import reduce_goals
from pwl.output import multiagent_system_to_dict, write_json


def run_reduce_goals(args):
    """Writes the single-goal version of a multi-agent system."""
    check_args(args)

    ms = load_multiagent_system(read_file(args.system))
    write_json(multiagent_system_to_dict(reduce_goals(ms)), args.out)

    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl reduce-goals')
    parser.add_argument(
        '--system',
        required=True,
        help='The multi-agent system file.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_reduce_goals(args)
