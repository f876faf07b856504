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
    non_negative_int,
    positive_int
)
from pwl.domains import (
    gen_alarm_example,
    gen_intro_example,
    gen_narrow_bridge,
    gen_random,
    gen_transport
)
from pwl.errors import ParseError
from pwl.input import load_transport_spec, parse_dimacs, read_file
from pwl.output import (
    extended_system_to_dict,
    multiagent_system_to_dict,
    system_to_dict,
    write_json
)
from pwl.reductions import random_cnf, system_from_cnf


def density(value):
    """argparse type for a probability in [0, 1]."""
    try:
        number = float(value)
    except ValueError:
        number = None
    if number is None or not (0 <= number <= 1):
        raise argparse.ArgumentTypeError(
            'density {!r} must be in [0, 1]'.format(value)
        )
    return number


def _cnf_system(args):
    if args.cnf:
        cnf = parse_dimacs(read_file(args.cnf))
    elif args.variables is not None and args.clauses is not None:
        cnf = random_cnf(args.seed, args.variables, args.clauses)
    else:
        raise ParseError('gen cnf needs --cnf or both --variables and '
                         '--clauses')
    return system_from_cnf(cnf)


_GENERATORS = {
    'intro': lambda args: system_to_dict(gen_intro_example()),
    'transport': lambda args: system_to_dict(
        gen_transport(**load_transport_spec(read_file(args.spec)))
    ),
    'random': lambda args: system_to_dict(gen_random(
        args.seed, args.states, args.actions, args.behaviors,
        args.goal_density, args.idle
    )),
    'cnf': lambda args: system_to_dict(_cnf_system(args)),
    'alarm': lambda args: extended_system_to_dict(gen_alarm_example()),
    'bridge': lambda args: multiagent_system_to_dict(gen_narrow_bridge())
}


def gen(args):
    """Writes a generated system file."""
    check_args(args)
    write_json(_GENERATORS[args.kind](args), args.out)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl gen')
    subparsers = parser.add_subparsers(dest='kind', metavar='kind')
    subparsers.required = True

    subparsers.add_parser('intro', help='The two-behavior sensing example.')

    transport = subparsers.add_parser(
        'transport', help='A routing system with uncertain end points.'
    )
    transport.add_argument(
        '--spec',
        required=True,
        help='JSON file with vertices, edges, uncertain, start and target.'
    )

    random = subparsers.add_parser('random', help='A random system.')
    random.add_argument('--states', type=positive_int, default=8)
    random.add_argument('--actions', type=positive_int, default=2)
    random.add_argument('--behaviors', type=positive_int, default=3)
    random.add_argument('--goal-density', dest='goal_density', type=density,
                        default=0.2)
    random.add_argument('--seed', type=non_negative_int, default=0)
    random.add_argument(
        '--idle',
        default=False,
        action='store_true',
        help='Adds a wait action that never changes the state.'
    )

    cnf = subparsers.add_parser(
        'cnf', help='The plan-existence system of a 3-CNF formula.'
    )
    cnf.add_argument('--cnf', help='A DIMACS CNF file.')
    cnf.add_argument('--variables', type=positive_int,
                     help='Number of variables of a random formula.')
    cnf.add_argument('--clauses', type=positive_int,
                     help='Number of clauses of a random formula.')
    cnf.add_argument('--seed', type=non_negative_int, default=0)

    subparsers.add_parser(
        'alarm', help='An extended system where an alarm blocks all routes.'
    )
    subparsers.add_parser(
        'bridge', help='A two-agent system sharing a narrow bridge.'
    )

    for subparser in subparsers.choices.values():
        add_out_argument(subparser)
        add_common_arguments(subparser)

    args = parser.parse_args(args)
    return gen(args)
