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

"""Planning-while-Learning systems and their knowledge semantics.

States, actions and behaviors are identified by dense integer indices in
declaration order; names only matter at file boundaries. A history key is a
tuple ``(q0, a1, q1, ..., ak, qk)`` of such indices.
"""

from collections import namedtuple

from pwl.errors import ValidationError
from pwl.settings import SettingsManager, get_constant


BehaviorTable = namedtuple('BehaviorTable', ('name', 'table'))
BehaviorTable.__doc__ = """One candidate deterministic world.

Args:
    name: The behavior name.
    table: Tuple of rows; `table[q][a]` is the next state index.
"""


def validate_names(names, kind):
    """Checks a list of symbolic names.

    Args:
        names: The names.
        kind: Human readable kind used in error messages.

    Raises:
        ValidationError: If a name is empty, repeated or holds the reserved
            history separator.
    """
    sep = get_constant('history_separator')
    seen = set()

    for name in names:
        if not isinstance(name, str) or not name:
            raise ValidationError(
                '{} name {!r} must be a nonempty string'.format(kind, name)
            )
        if sep in name:
            raise ValidationError(
                '{} name {!r} contains reserved separator {!r}'
                .format(kind, name, sep)
            )
        if name in seen:
            raise ValidationError('duplicate {} name {!r}'.format(kind, name))
        seen.add(name)


class PwlSystem:
    """A Planning-while-Learning system.

    The system is immutable after construction and validated on creation.

    Args:
        states: State names, in index order.
        actions: Action names, in index order.
        initial: Initial state index.
        behaviors: Nonempty sequence of BehaviorTable.
        goal: Iterable of goal state indices.

    Raises:
        ValidationError: If an invariant of the system is violated.
    """
    __slots__ = ('_states', '_actions', '_initial', '_behaviors', '_goal',
                 '_state_index', '_action_index')

    def __init__(self, states, actions, initial, behaviors, goal):
        self._states = tuple(states)
        self._actions = tuple(actions)
        self._initial = initial
        self._behaviors = tuple(
            BehaviorTable(b.name, tuple(tuple(row) for row in b.table))
            for b in behaviors
        )
        self._goal = frozenset(goal)
        self._state_index = {n: i for i, n in enumerate(self._states)}
        self._action_index = {n: i for i, n in enumerate(self._actions)}
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
    def behaviors(self):
        return self._behaviors

    @property
    def goal(self):
        return self._goal

    @property
    def behavior_names(self):
        return tuple(b.name for b in self._behaviors)

    @property
    def s(self):
        """Number of candidate behaviors."""
        return len(self._behaviors)

    @property
    def t(self):
        """Number of observable states."""
        return len(self._states)

    @property
    def all_behaviors(self):
        return frozenset(range(len(self._behaviors)))

    def state_index(self, name):
        """Resolves a state name.

        Raises:
            ValidationError: If the state is unknown.
        """
        try:
            return self._state_index[name]
        except (KeyError, TypeError):
            raise ValidationError('unknown state {!r}'.format(name))

    def action_index(self, name):
        """Resolves an action name.

        Raises:
            ValidationError: If the action is unknown.
        """
        try:
            return self._action_index[name]
        except (KeyError, TypeError):
            raise ValidationError('unknown action {!r}'.format(name))

    def step(self, b, q, a):
        """Applies behavior `b` to state `q` and action `a`.

        Raises:
            IndexError: If any identifier is out of range.
        """
        if not (0 <= b < len(self._behaviors)):
            raise IndexError('behavior index {} out of range'.format(b))
        if not (0 <= q < len(self._states)):
            raise IndexError('state index {} out of range'.format(q))
        if not (0 <= a < len(self._actions)):
            raise IndexError('action index {} out of range'.format(a))

        return self._behaviors[b].table[q][a]

    def validate(self):
        """Validates the system invariants.

        Raises:
            ValidationError: Naming the first violated invariant.
        """
        validate_names(self._states, 'state')
        validate_names(self._actions, 'action')

        t, n_actions = len(self._states), len(self._actions)
        max_states, max_behaviors = SettingsManager.get('max_states',
                                                        'max_behaviors')

        if t == 0:
            raise ValidationError('system has no states')
        if n_actions == 0:
            raise ValidationError('system has no actions')
        if t > max_states:
            raise ValidationError(
                '{} states exceed cap {}'.format(t, max_states)
            )
        if not isinstance(self._initial, int) or not (0 <= self._initial < t):
            raise ValidationError(
                'initial state {!r} is not a state'.format(self._initial)
            )
        for q in self._goal:
            if not isinstance(q, int) or not (0 <= q < t):
                raise ValidationError('goal state {!r} is not a state'.format(q))
        if not self._behaviors:
            raise ValidationError('system has no behaviors')
        if len(self._behaviors) > max_behaviors:
            raise ValidationError(
                '{} behaviors exceed cap {}'.format(len(self._behaviors),
                                                    max_behaviors)
            )

        validate_names(self.behavior_names, 'behavior')

        for behavior in self._behaviors:
            if len(behavior.table) != t or any(
                len(row) != n_actions for row in behavior.table
            ):
                raise ValidationError(
                    'non-total behavior {!r}'.format(behavior.name)
                )
            for row in behavior.table:
                for nq in row:
                    if not isinstance(nq, int) or not (0 <= nq < t):
                        raise ValidationError(
                            'behavior {!r} references unknown state {!r}'
                            .format(behavior.name, nq)
                        )

    def __eq__(self, other):
        if not isinstance(other, PwlSystem):
            return NotImplemented
        return (self._states, self._actions, self._initial, self._behaviors,
                self._goal) == (other._states, other._actions, other._initial,
                                other._behaviors, other._goal)

    def __hash__(self):
        return hash((self._states, self._actions, self._initial,
                     self._behaviors, self._goal))

    def __repr__(self):
        return 'PwlSystem(t={}, actions={}, s={})'.format(
            self.t, len(self._actions), self.s
        )


def step(system, b, q, a):
    """Returns the next state of behavior `b` from state `q` under action `a`.

    Args:
        system: The PwlSystem.
        b: The behavior index.
        q: The state index.
        a: The action index.

    Returns:
        The next state index.

    Raises:
        IndexError: If an identifier is out of range.
    """
    return system.step(b, q, a)


def is_goal(system, q):
    return q in system.goal


def history_states(history):
    return history[0::2]


def history_actions(history):
    return history[1::2]


def check_history(system, history, initial_states=None):
    """Checks that a history key is well formed for a system.

    Args:
        system: Any system exposing `states`, `actions` and `initial`.
        history: The history key.
        initial_states: Allowed first states. Defaults to the system's
            initial state.

    Raises:
        ValidationError: If the history is malformed.
    """
    if initial_states is None:
        initial_states = (system.initial,)

    if not isinstance(history, tuple) or len(history) % 2 != 1:
        raise ValidationError(
            'history {!r} does not alternate states and actions'
            .format(history)
        )

    if history[0] not in initial_states:
        raise ValidationError(
            'history {!r} does not start at an initial state'.format(history)
        )

    t, n_actions = len(system.states), len(system.actions)
    for i, x in enumerate(history):
        bound = t if i % 2 == 0 else n_actions
        if not isinstance(x, int) or not (0 <= x < bound):
            raise ValidationError(
                'history {!r} references unknown {} {!r}'.format(
                    history, 'state' if i % 2 == 0 else 'action', x
                )
            )


def consistent_behaviors(system, history):
    """Returns the behaviors that reproduce every transition in a history.

    Args:
        system: The PwlSystem.
        history: The history key.

    Returns:
        A frozenset of behavior indices; empty for an impossible history.

    Raises:
        ValidationError: If the history is malformed.
    """
    check_history(system, history)

    consistent = []
    for b, behavior in enumerate(system.behaviors):
        table = behavior.table
        if all(
            table[history[j - 2]][history[j - 1]] == history[j]
            for j in range(2, len(history), 2)
        ):
            consistent.append(b)

    return frozenset(consistent)


def split_knowledge(system, q, knowledge, a):
    """Partitions a knowledge set by the state each behavior moves to.

    Args:
        system: The PwlSystem.
        q: The current state index.
        knowledge: Iterable of behavior indices.
        a: The action index.

    Returns:
        List of (next state, frozenset of behaviors) in state index order.
        The behavior sets partition `knowledge`.
    """
    groups = {}
    behaviors = system.behaviors
    for b in knowledge:
        groups.setdefault(behaviors[b].table[q][a], []).append(b)

    return [(nq, frozenset(groups[nq])) for nq in sorted(groups)]
