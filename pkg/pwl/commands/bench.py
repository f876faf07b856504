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
import time

import numpy as np

from pwl.commands.common import (
    EXIT_SUCCESS,
    add_common_arguments,
    add_out_argument,
    check_args
)
from pwl.config.bench import BenchConfiguration
from pwl.domains import gen_random
from pwl.input import parse_bench_file
from pwl.output import printf, PrintType, write_json
from pwl.plan import plan_from_action_sequence
from pwl.verifier import verify


def bench_report(config, clock=time.perf_counter):
    """Times verification of one fixed plan as the behavior count grows.

    Systems are random with no goal states, so every run uses the whole
    horizon and the step count is exactly s * H.

    Args:
        config: A validated BenchConfiguration.
        clock: Function returning the current time in seconds.

    Returns:
        The report; everything that depends on the clock is under
        timing.
    """
    horizon = config.horizon
    sequence = [k % config.actions for k in range(horizon)]

    results = []
    seconds = {}
    for s in config.behaviors:
        system = gen_random(config.seed, config.states, config.actions, s, 0)
        plan = plan_from_action_sequence(sequence, system, horizon)

        times = []
        for _ in range(config.repetitions):
            start = clock()
            verdict = verify(system, plan, horizon)
            times.append(clock() - start)

        seconds[s] = float(np.median(times))
        results.append({
            'behaviors': s,
            'entries': len(plan),
            'step_count': verdict.step_count,
            'step_bound': s * horizon
        })

        printf('s={}: {} steps in {:.6f}s'.format(s, verdict.step_count,
                                                  seconds[s]),
               print_type=PrintType.NORMAL | PrintType.INFO_LOG)

    baseline = seconds[config.baseline]
    ordered = sorted(seconds)
    timing = {
        'seconds': [{'behaviors': s, 'seconds': seconds[s]} for s in ordered],
        'relative': [
            {'behaviors': s,
             'ratio': seconds[s] / baseline if baseline else None}
            for s in ordered
        ],
        'growth': [
            {'from': a, 'to': b,
             'ratio': seconds[b] / seconds[a] if seconds[a] else None}
            for a, b in zip(ordered, ordered[1:])
        ]
    }

    return {
        'config': {
            'behaviors': list(config.behaviors),
            'baseline': config.baseline,
            'states': config.states,
            'actions': config.actions,
            'horizon': horizon,
            'seed': config.seed,
            'repetitions': config.repetitions
        },
        'results': results,
        'timing': timing
    }


def bench(args):
    """Runs the verification scaling benchmark."""
    check_args(args)

    if args.config:
        config = parse_bench_file(args.config)
    else:
        config = BenchConfiguration()
        config.validate()

    write_json(bench_report(config), args.out)
    return EXIT_SUCCESS


def main(args):
    parser = argparse.ArgumentParser(prog='pwl bench')
    parser.add_argument(
        '-c', '--config',
        help='INI file with a [bench] section. Defaults are used otherwise.'
    )
    add_out_argument(parser)
    add_common_arguments(parser)

    args = parser.parse_args(args)
    return bench(args)
