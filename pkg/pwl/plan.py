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

"""Conditional plans as history-indexed decision tables."""

from collections import namedtuple
import enum
from types import MappingProxyType

from pwl.errors import ValidationError
from pwl.model import check_history, split_knowledge
from pwl.output import printf, PrintType


class Outcome(enum.Enum):
    GOAL_REACHED = 'goal_reached'
    UNDEFINED_ENTRY = 'undefined_entry'
    HORIZON_EXHAUSTED = 'horizon_exhausted'


TreeNode = namedtuple(
    'TreeNode', ('state', 'knowledge', 'action', 'leaf', 'children')
)
TreeNode.__doc__ = """A node of the decision tree view of a plan.

Args:
    state: The observable state index.
    knowledge: Frozenset of behaviors consistent with the path to the node.
    action: The chosen action, or None for a leaf.
    leaf: An Outcome for leaves, otherwise None.
    children: Tuple of (observed next state, TreeNode), in state order.
"""

_OpenNode = namedtuple(
    '_OpenNode',
    ('state', 'knowledge', 'history', 'depth', 'action', 'pending', 'children')
)


class PlanTable:
    """A finite map from history keys to actions, with a horizon.

    Args:
        entries: Mapping or iterable of (history key, action index).
        horizon: Maximum number of actions on any branch.

    Raises:
        ValidationError: If the horizon is not a non-negative integer.
    """
    __slots__ = ('_entries', '_horizon')

    def __init__(self, entries, horizon):
        if isinstance(horizon, bool) or not isinstance(horizon, int) \
                or horizon < 0:
            raise ValidationError(
                'horizon {!r} must be a non-negative integer'.format(horizon)
            )

        self._entries = {tuple(h): a for h, a in dict(entries).items()}
        self._horizon = horizon

    @property
    def entries(self):
        return MappingProxyType(self._entries)

    @property
    def horizon(self):
        return self._horizon

    def get(self, history):
        return self._entries.get(history)

    def sorted_entries(self):
        """Returns the entries ordered by history length, then indices."""
        return sorted(self._entries.items(), key=lambda e: (len(e[0]), e[0]))

    def with_horizon(self, horizon):
        return PlanTable(self._entries, horizon)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, PlanTable):
            return NotImplemented
        return (self._horizon, self._entries) == (other._horizon,
                                                  other._entries)

    def __repr__(self):
        return 'PlanTable(entries={}, horizon={})'.format(
            len(self._entries), self._horizon
        )


def plan_action(plan, history):
    """Looks up the action a plan takes after a history.

    Args:
        plan: The PlanTable.
        history: The history key.

    Returns:
        The action index, or None when the plan is undefined there.
    """
    return plan.get(history)


def check_plan(system, plan, initial_states=None):
    """Checks that every key and action of a plan is valid for a system.

    Args:
        system: Any system exposing `states`, `actions` and `initial`.
        plan: The PlanTable.
        initial_states: Allowed first states of a key. Defaults to the
            system's initial state.

    Raises:
        ValidationError: If a key is malformed, too long for the horizon or
            references unknown symbols.
    """
    max_length = 2 * plan.horizon + 1
    n_actions = len(system.actions)

    for h, a in plan.entries.items():
        check_history(system, h, initial_states)
        if len(h) > max_length:
            raise ValidationError(
                'history {!r} is longer than horizon {}'
                .format(h, plan.horizon)
            )
        if isinstance(a, bool) or not isinstance(a, int) \
                or not (0 <= a < n_actions):
            raise ValidationError(
                'history {!r} maps to unknown action {!r}'.format(h, a)
            )


def _queried_histories(system, b, choose, horizon):
    """Yields (history, action) pairs a behavior's run asks for.

    The run stops at a goal state, when `choose` returns None, or after
    `horizon` actions.
    """
    table = system.behaviors[b].table
    goal = system.goal
    q = system.initial
    h = (q,)

    for k in range(horizon):
        if q in goal:
            return
        a = choose(h, k)
        if a is None:
            return
        yield h, a
        q = table[q][a]
        h = h + (a, q)


def canonicalize_plan(system, plan):
    """Keeps exactly the entries some behavior's run of the plan consults.

    Args:
        system: The PwlSystem.
        plan: The PlanTable.

    Returns:
        A new PlanTable with at most s * horizon entries.

    Raises:
        ValidationError: If a key references unknown states or actions.
    """
    check_plan(system, plan)

    kept = {}
    for b in range(system.s):
        kept.update(_queried_histories(
            system, b, lambda h, k: plan.get(h), plan.horizon
        ))

    if len(kept) != len(plan):
        printf('Canonicalization dropped {} of {} plan entries'
               .format(len(plan) - len(kept), len(plan)),
               print_type=PrintType.DEBUG_LOG)

    return PlanTable(kept, plan.horizon)


def plan_from_action_sequence(sequence, system, horizon):
    """Builds the table of an unconditional plan.

    Every plausible history with k actions maps to `sequence[k]`; branches
    stop early on goal states.

    Args:
        sequence: List of action indices.
        system: The PwlSystem.
        horizon: The plan horizon.

    Returns:
        A PlanTable.

    Raises:
        ValidationError: If the sequence is longer than the horizon.
    """
    sequence = list(sequence)
    if len(sequence) > horizon:
        raise ValidationError(
            'sequence of {} actions exceeds horizon {}'
            .format(len(sequence), horizon)
        )

    def choose(h, k):
        return sequence[k] if k < len(sequence) else None

    entries = {}
    for b in range(system.s):
        entries.update(_queried_histories(system, b, choose, horizon))

    return PlanTable(entries, horizon)


def decision_tree_view(system, plan):
    """Renders a plan as a decision tree over belief nodes.

    Args:
        system: The PwlSystem.
        plan: The (canonicalized) PlanTable.

    Returns:
        The root TreeNode; its knowledge set holds every behavior.
    """
    goal = system.goal

    def visit(q, knowledge, h, depth):
        """Returns a leaf TreeNode, or an _OpenNode still to be expanded."""
        if q in goal:
            return TreeNode(q, knowledge, None, Outcome.GOAL_REACHED, ())
        if depth == plan.horizon:
            return TreeNode(q, knowledge, None, Outcome.HORIZON_EXHAUSTED, ())

        a = plan.get(h)
        if a is None:
            return TreeNode(q, knowledge, None, Outcome.UNDEFINED_ENTRY, ())

        return _OpenNode(q, knowledge, h, depth, a,
                         split_knowledge(system, q, knowledge, a), [])

    # Children are built before their parent, on an explicit stack.
    root = visit(system.initial, system.all_behaviors, (system.initial,), 0)
    if not isinstance(root, _OpenNode):
        return root

    stack = [root]
    while True:
        top = stack[-1]
        if len(top.children) < len(top.pending):
            nq, nk = top.pending[len(top.children)]
            child = visit(nq, nk, top.history + (top.action, nq),
                          top.depth + 1)
            if isinstance(child, _OpenNode):
                stack.append(child)
            else:
                top.children.append((nq, child))
            continue

        stack.pop()
        node = TreeNode(top.state, top.knowledge, top.action, None,
                        tuple(top.children))
        if not stack:
            return node
        stack[-1].children.append((node.state, node))


def tree_depth(node):
    """Returns the number of actions on the longest root-to-leaf path."""
    deepest = 0
    stack = [(node, 0)]
    while stack:
        node, depth = stack.pop()
        deepest = max(deepest, depth)
        stack.extend((child, depth + 1) for _, child in node.children)
    return deepest


def longest_branch(system, plan):
    return tree_depth(decision_tree_view(system, plan))


def is_efficient(system, plan, bound):
    """Checks that no branch of a plan executes more than `bound` actions."""
    return longest_branch(system, plan) <= bound
