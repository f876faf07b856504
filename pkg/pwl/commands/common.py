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

"""Arguments and helpers shared by every command."""

import argparse
import logging

from pwl.input import load_plan, load_system, read_file
from pwl.settings import SettingsManager
from pwl.util import cast_int


EXIT_SUCCESS = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def non_negative_int(value):
    """argparse type for integers >= 0."""
    number = cast_int(value)
    if number is None or number < 0:
        raise argparse.ArgumentTypeError(
            '{!r} is not a non-negative integer'.format(value)
        )
    return number


def positive_int(value):
    """argparse type for integers >= 1."""
    number = cast_int(value)
    if number is None or number < 1:
        raise argparse.ArgumentTypeError(
            '{!r} is not a positive integer'.format(value)
        )
    return number


def threshold(value):
    """argparse type for a fraction in (0, 1]."""
    try:
        number = float(value)
    except ValueError:
        number = None
    if number is None or not (0 < number <= 1):
        raise argparse.ArgumentTypeError(
            'threshold {!r} must be in (0, 1]'.format(value)
        )
    return number


def add_common_arguments(parser):
    """Adds the logging, output and parallelism flags to a parser."""
    parser.add_argument(
        '-l', '--log-file',
        dest='log_file',
        help='The file to log information to.'
    )
    parser.add_argument(
        '--log-level',
        dest='log_level',
        choices=[1, 2, 3],
        default=2,
        type=int,
        help='The level of information to which to log: 1 (Debug), '
             '2 (Info), 3 (Error). Defaults to 2.'
    )
    parser.add_argument(
        '-s', '--silent',
        default=False,
        action='store_true',
        help='Silences diagnostics on STDERR.'
    )
    parser.add_argument(
        '-w', '--workers',
        default=1,
        type=positive_int,
        help='Number of worker threads used for verification. Results are '
             'identical for any value. Defaults to 1.'
    )
    parser.add_argument(
        '--format',
        choices=['json'],
        default='json',
        help='The output format. Defaults to json.'
    )


def add_out_argument(parser):
    parser.add_argument(
        '-o', '--out',
        help='The file to write the result to. Defaults to STDOUT.'
    )


def check_args(args):
    """Checks the command-line arguments and sets settings.

    Args:
        args: The arguments to check.
    """
    if args.log_file:
        SettingsManager.set('log_enabled', True)
        logging.basicConfig(filename=args.log_file,
                            level=get_log_level(args.log_level),
                            format='%(asctime)s - %(message)s')
    else:
        SettingsManager.set('log_enabled', False)

    SettingsManager.set('silent', args.silent)
    SettingsManager.set('workers', args.workers)


def get_log_level(log_level):
    """Converts the `log_level` into logging level.

    Args:
        log_level: The level to convert.

    Returns:
        A logging level.
    """
    if log_level == 1:
        return logging.DEBUG
    if log_level == 2:
        return logging.INFO
    return logging.ERROR


def load_system_file(input_file):
    return load_system(read_file(input_file))


def load_plan_file(input_file, states, actions):
    return load_plan(read_file(input_file), states, actions)
