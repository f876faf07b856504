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
from pwl.input import load_multiagent_plan, load_multiagent_system, read_file
from pwl.multiagent import ma_verify
from pwl.output import ma_verdict_to_dict, printf, PrintType, write_json


def run_ma_verify(args):
    """Verifies a multi-agent plan for every agent and goal.

    Returns:
        0 if every goal of both agents is covered, 1 otherwise.
    """
    check_args(args)

    ms = load_multiagent_system(read_file(args.system))
    mp = load_multiagent_plan(read_file(args.plan), ms)
    verdict = ma_verify(ms, mp, args.horizon)

    write_json(ma_verdict_to_dict(verdict, ms), args.out)

    if not verdict.satisfactory:
        printf('Multi-agent plan is not satisfactory',
               print_type=PrintType.WARNING | PrintType.INFO_LOG)
        return EXIT_NEGATIVE

    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl ma-verify')
    parser.add_argument(
        '--system',
        required=True,
        help='The multi-agent system file.'
    )
    parser.add_argument(
        '--plan',
        required=True,
        help='The multi-agent plan file.'
    )
    parser.add_argument(
        '--horizon',
        type=non_negative_int,
        help='Number of joint steps. Defaults to the largest plan horizon.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return run_ma_verify(args)
