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

"""Depth-bounded AND-OR search for satisfactory plans.

Deciding plan existence is NP-hard, so the search is exponential in the worst
case. It is complete for basic systems at horizon s * t, the longest branch a
satisfactory plan ever needs.
"""

from abc import ABC, abstractmethod
from collections import namedtuple

from pwl.errors import ValidationError
from pwl.model import split_knowledge
from pwl.output import printf, PrintType
from pwl.plan import PlanTable


BeliefNode = namedtuple('BeliefNode', ('state', 'knowledge'))


class _Frame:
    """A node on the search stack and the action it is trying."""
    __slots__ = ('node', 'budget', 'entry', 'actions', 'children', 'index')

    def __init__(self, node, budget, entry, actions):
        self.node = node
        self.budget = budget
        self.entry = entry
        self.actions = iter(actions)
        self.children = None
        self.index = 0


class PlanSearch(ABC):
    """AND-OR search over belief nodes with a budget-aware memo.

    A node is solved with budget d iff it is a goal node, or d > 0 and some
    action has every successor solved with budget d - 1. Solvability is
    monotone in the budget, so the memo keeps, per node key, the smallest
    budget known to succeed and the largest known to fail.

    Args:
        horizon: The search budget (maximum branch length).

    Raises:
        ValidationError: If the horizon is negative.
    """
    def __init__(self, horizon):
        if isinstance(horizon, bool) or not isinstance(horizon, int) \
                or horizon < 0:
            raise ValidationError(
                'horizon {!r} must be a non-negative integer'.format(horizon)
            )

        self.horizon = horizon
        self.explored = 0
        self._memo = {}

    @abstractmethod
    def root(self):
        """Returns the root node."""

    @abstractmethod
    def actions(self):
        """Returns the action indices in declaration order."""

    @abstractmethod
    def is_goal(self, node):
        """Returns whether a node's observable state is a goal."""

    @abstractmethod
    def successors(self, node, a):
        """Returns the successors of a node under an action.

        Returns:
            Sequence of (observed state, node) in state index order.
        """

    @abstractmethod
    def key(self, node):
        """Returns the memo key of a node."""

    def _known(self, node, budget):
        """Returns True or False when the answer needs no expansion, else
        None."""
        if self.is_goal(node):
            return True
        if budget == 0:
            return False

        entry = self._memo.get(self.key(node))
        if entry is not None:
            min_success, max_fail = entry
            if min_success is not None and min_success <= budget:
                return True
            if max_fail is not None and max_fail >= budget:
                return False
        return None

    def _open(self, node, budget):
        self.explored += 1
        entry = self._memo.setdefault(self.key(node), [None, None])
        return _Frame(node, budget, entry, self.actions())

    def solved(self, node, budget):
        """Decides whether a node is solvable within a budget.

        Depth-first over an explicit stack, so the budget is not bounded by
        the interpreter's recursion limit. Actions are tried in declaration
        order and successors in state order.
        """
        result = self._known(node, budget)
        if result is not None:
            return result

        stack = [self._open(node, budget)]
        while stack:
            frame = stack[-1]
            if result is not None:
                # The child on top of this frame just finished.
                if result:
                    frame.index += 1
                else:
                    frame.children = None
                result = None

            while True:
                if frame.children is None:
                    a = next(frame.actions, None)
                    if a is None:
                        result = False
                        break
                    frame.children = self.successors(frame.node, a)
                    frame.index = 0
                if frame.index == len(frame.children):
                    result = True
                    break

                child = frame.children[frame.index][1]
                known = self._known(child, frame.budget - 1)
                if known is None:
                    stack.append(self._open(child, frame.budget - 1))
                    break
                if known:
                    frame.index += 1
                else:
                    frame.children = None

            if result is None:
                continue

            entry = frame.entry
            if result:
                if entry[0] is None or frame.budget < entry[0]:
                    entry[0] = frame.budget
            elif entry[1] is None or frame.budget > entry[1]:
                entry[1] = frame.budget
            stack.pop()

        return result

    def exists(self):
        return self.solved(self.root(), self.horizon)

    def plan(self):
        """Extracts a plan, taking the first solving action at every node.

        Returns:
            A canonical PlanTable with the search horizon, or None if no plan
            exists within the horizon.
        """
        root = self.root()
        if not self.solved(root, self.horizon):
            printf('No plan within horizon {} ({} nodes explored)'
                   .format(self.horizon, self.explored),
                   print_type=PrintType.INFO_LOG)
            return None

        entries = self._extract(root)

        printf('Synthesized plan with {} entries ({} nodes explored)'
               .format(len(entries), self.explored),
               print_type=PrintType.INFO_LOG)

        return PlanTable(entries, self.horizon)

    def _extract(self, root):
        entries = {}
        stack = [(root, (root.state,), self.horizon)]

        while stack:
            node, history, budget = stack.pop()
            if self.is_goal(node):
                continue

            for a in self.actions():
                children = self.successors(node, a)
                if all(self.solved(child, budget - 1)
                       for _, child in children):
                    entries[history] = a
                    stack.extend(
                        (child, history + (a, observed), budget - 1)
                        for observed, child in reversed(children)
                    )
                    break

        return entries


class BeliefSearch(PlanSearch):
    """Plan search over (state, knowledge set) nodes of a basic system.

    Args:
        system: The PwlSystem.
        horizon: The search budget. Defaults to s * t.
    """
    def __init__(self, system, horizon=None):
        if horizon is None:
            horizon = system.s * system.t
        super().__init__(horizon)
        self.system = system

    def root(self):
        return BeliefNode(self.system.initial, self.system.all_behaviors)

    def actions(self):
        return range(len(self.system.actions))

    def is_goal(self, node):
        return node.state in self.system.goal

    def successors(self, node, a):
        return [(child.state, child)
                for child in successors(self.system, node, a)]

    def key(self, node):
        return node


def successors(system, node, a):
    """Splits a belief node by the state each behavior moves to.

    Args:
        system: The PwlSystem.
        node: The BeliefNode.
        a: The action index.

    Returns:
        Tuple of BeliefNode in state index order; their knowledge sets
        partition `node.knowledge`.
    """
    return tuple(
        BeliefNode(nq, nk)
        for nq, nk in split_knowledge(system, node.state, node.knowledge, a)
    )


def exists_plan(system, horizon=None):
    """Decides whether a satisfactory plan with branches <= horizon exists.

    Args:
        system: The PwlSystem.
        horizon: Maximum branch length. Defaults to s * t.

    Returns:
        True if such a plan exists.
    """
    return BeliefSearch(system, horizon).exists()


def synthesize(system, horizon=None):
    """Constructs a satisfactory plan with branches <= horizon.

    Args:
        system: The PwlSystem.
        horizon: Maximum branch length. Defaults to s * t.

    Returns:
        A canonical PlanTable, or None if no such plan exists.
    """
    return BeliefSearch(system, horizon).plan()
