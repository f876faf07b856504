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


from collections import namedtuple
from fractions import Fraction

from pwl.errors import ValidationError
from pwl.output import printf, PrintType
from pwl.plan import check_plan, Outcome
from pwl.settings import SettingsManager
from pwl.util import pool_map


class Trace(namedtuple('Trace', ('behavior', 'steps', 'final_state',
                                 'outcome', 'goal_step', 'undefined_history',
                                 'hidden'))):
    """The run of a plan under one behavior.

    Args:
        behavior: The behavior index the run was made under.
        steps: Tuple of (state, action) pairs, in execution order.
        final_state: The state the run ended in.
        outcome: The Outcome of the run.
        goal_step: Number of actions before the goal was reached, or None.
        undefined_history: The history the plan had no entry for, or None.
        hidden: Hidden behavior per visited state, for systems whose
            behavior evolves; empty otherwise.
    """
    __slots__ = ()

    @property
    def succeeded(self):
        return self.outcome is Outcome.GOAL_REACHED


class Verdict(namedtuple('Verdict', ('traces', 'satisfied_count',
                                     'satisfied_fraction', 'threshold',
                                     'satisfactory', 'step_count'))):
    """The aggregated result of verifying a plan.

    Args:
        traces: Tuple of Trace, one per behavior in index order.
        satisfied_count: Number of traces that reached the goal.
        satisfied_fraction: `satisfied_count` over the number of traces.
        threshold: The required fraction.
        satisfactory: Whether `satisfied_fraction` meets `threshold`.
        step_count: Total number of transitions applied.
    """
    __slots__ = ()

    @property
    def failures(self):
        return tuple(t for t in self.traces if not t.succeeded)


def run_plan(plan, start, horizon, goal, advance, hidden=None):
    """Runs a plan from a start state.

    Args:
        plan: The PlanTable.
        start: The start state index.
        horizon: The maximum number of actions.
        goal: Container of goal state indices.
        advance: Function (state, hidden, action) -> (state, hidden).
        hidden: Initial hidden component passed through `advance`.

    Returns:
        Tuple of (steps, final state, outcome, goal step, undefined history,
        hidden trail).
    """
    q = start
    h = (q,)
    steps = []
    trail = [hidden]

    for k in range(horizon + 1):
        if q in goal:
            return steps, q, Outcome.GOAL_REACHED, k, None, trail
        if k == horizon:
            break

        a = plan.get(h)
        if a is None:
            return steps, q, Outcome.UNDEFINED_ENTRY, None, h, trail

        steps.append((q, a))
        q, hidden = advance(q, hidden, a)
        trail.append(hidden)
        h = h + (a, q)

    return steps, q, Outcome.HORIZON_EXHAUSTED, None, None, trail


def simulate(system, plan, b, horizon=None):
    """Simulates a plan under one behavior.

    Args:
        system: The PwlSystem.
        plan: The PlanTable.
        b: The behavior index.
        horizon: Maximum number of actions. Defaults to the plan horizon.

    Returns:
        A Trace.

    Raises:
        IndexError: If `b` is not a behavior index.
    """
    if not (0 <= b < system.s):
        raise IndexError('behavior index {} out of range'.format(b))

    if horizon is None:
        horizon = plan.horizon

    table = system.behaviors[b].table

    def advance(q, hidden, a):
        return table[q][a], hidden

    steps, final, outcome, goal_step, undefined, _ = run_plan(
        plan, system.initial, horizon, system.goal, advance
    )
    return Trace(b, tuple(steps), final, outcome, goal_step, undefined, ())


def check_threshold(threshold):
    """Checks a satisfaction threshold.

    Raises:
        ValidationError: If `threshold` is not in (0, 1].
    """
    if isinstance(threshold, bool) or not isinstance(threshold, (int, float,
                                                                 Fraction)) \
            or not (0 < threshold <= 1):
        raise ValidationError(
            'threshold {!r} must be in (0, 1]'.format(threshold)
        )


def make_verdict(traces, threshold=1):
    """Aggregates traces into a Verdict.

    Args:
        traces: Sequence of Trace.
        threshold: The required fraction of succeeding traces.

    Returns:
        A Verdict.
    """
    traces = tuple(traces)
    count = sum(1 for t in traces if t.succeeded)
    fraction = Fraction(count, len(traces)) if traces else Fraction(0)
    required = Fraction(str(threshold))

    return Verdict(
        traces=traces,
        satisfied_count=count,
        satisfied_fraction=float(fraction),
        threshold=float(threshold),
        satisfactory=bool(traces) and fraction >= required,
        step_count=sum(len(t.steps) for t in traces)
    )


def verify(system, plan, horizon=None, threshold=1):
    """Verifies a plan under every behavior.

    Args:
        system: The PwlSystem.
        plan: The PlanTable.
        horizon: Maximum number of actions. Defaults to the plan horizon.
        threshold: Required fraction of behaviors reaching the goal.

    Returns:
        A Verdict with one trace per behavior, in behavior order.

    Raises:
        ValidationError: If the plan references unknown symbols or the
            threshold is out of range.
    """
    check_threshold(threshold)
    check_plan(system, plan)

    if horizon is None:
        horizon = plan.horizon

    traces = pool_map(lambda b: simulate(system, plan, b, horizon),
                      range(system.s), SettingsManager.get('workers'))
    verdict = make_verdict(traces, threshold)

    printf('Verified plan: {} of {} behaviors reach the goal within {} steps'
           .format(verdict.satisfied_count, system.s, horizon),
           print_type=PrintType.INFO_LOG)

    return verdict
