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


from pwl.errors import NotSatisfactoryError
from pwl.output import printf, PrintType
from pwl.plan import decision_tree_view, PlanTable
from pwl.verifier import verify


def _splice_target(node):
    """Finds the deepest node reachable from `node` without learning anything
    that sits in the same observable state.

    Below a node with a single child the knowledge set is unchanged, so the
    chain of single children is exactly the stretch with no learning.
    """
    target = node
    current = node

    while current.leaf is None and len(current.children) == 1:
        current = current.children[0][1]
        if current.state == node.state:
            target = current

    return target


def shrink(system, plan):
    """Splices no-learning loops out of a satisfactory plan.

    Along every branch, a segment that starts and ends in the same
    (state, knowledge) label is removed; the earliest label is spliced first,
    to its deepest repetition. The resulting branches never exceed s * t.

    Args:
        system: The PwlSystem.
        plan: A satisfactory PlanTable.

    Returns:
        A satisfactory PlanTable with horizon min(plan horizon, s * t).

    Raises:
        NotSatisfactoryError: If `plan` is not satisfactory.
    """
    if not verify(system, plan, plan.horizon, 1).satisfactory:
        raise NotSatisfactoryError('Plan is not satisfactory, cannot shrink')

    entries = {}
    splices = 0

    stack = [(decision_tree_view(system, plan), (system.initial,))]
    while stack:
        node, history = stack.pop()
        target = _splice_target(node)
        if target is not node:
            splices += 1
        if target.leaf is not None:
            continue

        entries[history] = target.action
        stack.extend((child, history + (target.action, observed))
                     for observed, child in target.children)

    printf('Shrink spliced {} segments, {} of {} entries kept'
           .format(splices, len(entries), len(plan)),
           print_type=PrintType.INFO_LOG)

    return PlanTable(entries, min(plan.horizon, system.s * system.t))
