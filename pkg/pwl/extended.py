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

"""Extended systems, where actions may change the environment behavior.

The global transition maps (state, behavior, action) to (state, behavior).
The planner only observes states; the initial behavior is one of a declared
set of candidates.
"""

from collections import namedtuple

from pwl.errors import ValidationError
from pwl.model import validate_names
from pwl.output import printf, PrintType
from pwl.plan import check_plan
from pwl.settings import SettingsManager
from pwl.synthesizer import PlanSearch
from pwl.util import pool_map
from pwl.verifier import check_threshold, make_verdict, run_plan, Trace


ExtNode = namedtuple('ExtNode', ('state', 'candidates'))
ExtNode.__doc__ = """A belief node of an extended system.

Args:
    state: The observable state index.
    candidates: Frozenset of (initial behavior, current behavior) pairs
        still consistent with the observed history.
"""


class ExtendedSystem:
    """A system whose behavior evolves under a known global transition.

    Args:
        states: State names, in index order.
        actions: Action names, in index order.
        initial: Initial state index.
        goal: Iterable of goal state indices.
        behavior_ids: Behavior names, in index order.
        initial_candidates: Iterable of behavior indices the initial
            behavior may be.
        gamma: Nested sequence; `gamma[q][b][a]` is the pair
            (next state, next behavior).

    Raises:
        ValidationError: If an invariant is violated.
    """
    __slots__ = ('_states', '_actions', '_initial', '_goal', '_behavior_ids',
                 '_initial_candidates', '_gamma')

    def __init__(self, states, actions, initial, goal, behavior_ids,
                 initial_candidates, gamma):
        self._states = tuple(states)
        self._actions = tuple(actions)
        self._initial = initial
        self._goal = frozenset(goal)
        self._behavior_ids = tuple(behavior_ids)
        self._initial_candidates = frozenset(initial_candidates)
        self._gamma = tuple(
            tuple(tuple(tuple(pair) for pair in row) for row in per_state)
            for per_state in gamma
        )
        self.validate()

    @property
    def states(self):
        return self._states

    @property
    def actions(self):
        return self._actions

    @property
    def initial(self):
        return self._initial

    @property
    def goal(self):
        return self._goal

    @property
    def behavior_ids(self):
        return self._behavior_ids

    @property
    def initial_candidates(self):
        return self._initial_candidates

    @property
    def t(self):
        return len(self._states)

    def transition(self, q, b, a):
        """Returns the (next state, next behavior) pair."""
        return self._gamma[q][b][a]

    def validate(self):
        validate_names(self._states, 'state')
        validate_names(self._actions, 'action')
        validate_names(self._behavior_ids, 'behavior')

        t, n_actions = len(self._states), len(self._actions)
        n_behaviors = len(self._behavior_ids)

        if t == 0 or n_actions == 0 or n_behaviors == 0:
            raise ValidationError(
                'extended system needs states, actions and behaviors'
            )
        if t > SettingsManager.get('max_states'):
            raise ValidationError('{} states exceed cap'.format(t))
        if not isinstance(self._initial, int) or not (0 <= self._initial < t):
            raise ValidationError(
                'initial state {!r} is not a state'.format(self._initial)
            )
        for q in self._goal:
            if not isinstance(q, int) or not (0 <= q < t):
                raise ValidationError('goal state {!r} is not a state'.format(q))
        if not self._initial_candidates:
            raise ValidationError('no candidate initial behaviors')
        for b in self._initial_candidates:
            if not isinstance(b, int) or not (0 <= b < n_behaviors):
                raise ValidationError(
                    'candidate {!r} is not a behavior'.format(b)
                )

        if len(self._gamma) != t or any(
            len(per_state) != n_behaviors
            or any(len(row) != n_actions for row in per_state)
            for per_state in self._gamma
        ):
            raise ValidationError('global transition is not total')

        for per_state in self._gamma:
            for row in per_state:
                for pair in row:
                    if len(pair) != 2 or not (0 <= pair[0] < t) \
                            or not (0 <= pair[1] < n_behaviors):
                        raise ValidationError(
                            'global transition yields unknown pair {!r}'
                            .format(pair)
                        )

    def __eq__(self, other):
        if not isinstance(other, ExtendedSystem):
            return NotImplemented
        return all(getattr(self, s) == getattr(other, s)
                   for s in self.__slots__)

    def __repr__(self):
        return 'ExtendedSystem(t={}, actions={}, behaviors={}, B0={})'.format(
            self.t, len(self._actions), len(self._behavior_ids),
            len(self._initial_candidates)
        )


def embed_basic(system):
    """Views a basic system as an extended system with static behaviors."""
    gamma = [
        [[(behavior.table[q][a], b) for a in range(len(system.actions))]
         for b, behavior in enumerate(system.behaviors)]
        for q in range(system.t)
    ]
    return ExtendedSystem(system.states, system.actions, system.initial,
                          system.goal, system.behavior_names,
                          range(system.s), gamma)


def ext_simulate(es, plan, b0, horizon=None):
    """Simulates a plan from one initial behavior.

    Args:
        es: The ExtendedSystem.
        plan: The PlanTable.
        b0: The initial behavior index.
        horizon: Maximum number of actions. Defaults to the plan horizon.

    Returns:
        A Trace whose `hidden` field lists the behavior at every visited
        state.

    Raises:
        IndexError: If `b0` is not a behavior index.
        ValidationError: If `b0` is not a candidate initial behavior.
    """
    if not (0 <= b0 < len(es.behavior_ids)):
        raise IndexError('behavior index {} out of range'.format(b0))
    if b0 not in es.initial_candidates:
        raise ValidationError(
            'behavior {!r} is not a candidate initial behavior'
            .format(es.behavior_ids[b0])
        )

    if horizon is None:
        horizon = plan.horizon

    def advance(q, b, a):
        return es.transition(q, b, a)

    steps, final, outcome, goal_step, undefined, trail = run_plan(
        plan, es.initial, horizon, es.goal, advance, b0
    )
    return Trace(b0, tuple(steps), final, outcome, goal_step, undefined,
                 tuple(trail))


def ext_verify(es, plan, horizon=None, threshold=1):
    """Verifies a plan under every candidate initial behavior.

    Returns:
        A Verdict with one trace per candidate, in behavior order.

    Raises:
        ValidationError: If the plan references unknown symbols or the
            threshold is out of range.
    """
    check_threshold(threshold)
    check_plan(es, plan)

    if horizon is None:
        horizon = plan.horizon

    traces = pool_map(lambda b: ext_simulate(es, plan, b, horizon),
                      sorted(es.initial_candidates),
                      SettingsManager.get('workers'))
    verdict = make_verdict(traces, threshold)

    printf('Verified extended plan: {} of {} candidates reach the goal'
           .format(verdict.satisfied_count, len(traces)),
           print_type=PrintType.INFO_LOG)

    return verdict


class ExtendedBeliefSearch(PlanSearch):
    """Plan search over nodes tracking each surviving initial behavior.

    Two nodes with the same state and the same set of current behaviors
    have the same future, so they share a memo entry.
    """
    def __init__(self, es, horizon):
        super().__init__(horizon)
        self.es = es

    def root(self):
        return ExtNode(self.es.initial,
                       frozenset((b, b) for b in self.es.initial_candidates))

    def actions(self):
        return range(len(self.es.actions))

    def is_goal(self, node):
        return node.state in self.es.goal

    def successors(self, node, a):
        groups = {}
        for b0, b in node.candidates:
            nq, nb = self.es.transition(node.state, b, a)
            groups.setdefault(nq, set()).add((b0, nb))

        return [(nq, ExtNode(nq, frozenset(groups[nq])))
                for nq in sorted(groups)]

    def key(self, node):
        return node.state, frozenset(b for _, b in node.candidates)


def ext_synthesize(es, horizon):
    """Constructs a satisfactory plan with branches <= horizon.

    The s * t bound of basic systems does not carry over, so the horizon
    has no default.

    Returns:
        A PlanTable, or None if no plan exists within the horizon.
    """
    return ExtendedBeliefSearch(es, horizon).plan()
