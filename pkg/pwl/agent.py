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


from pwl.errors import ValidationError
from pwl.output import printf, PrintType
from pwl.plan import check_plan


class PlanExecutor:
    """Executes a plan on-line, learning the behavior from observations.

    The executor holds the observed history and the set of behaviors
    consistent with it. The caller asks for `next_action`, performs it in
    the world and reports the resulting state with `observe`.

    Args:
        system: The PwlSystem.
        plan: The PlanTable.

    Raises:
        ValidationError: If the plan references unknown symbols.
    """
    def __init__(self, system, plan):
        check_plan(system, plan)
        self.system = system
        self.plan = plan
        self._history = (system.initial,)
        self._knowledge = system.all_behaviors
        self._pending = None
        self.learned = []

    @property
    def history(self):
        return self._history

    @property
    def knowledge(self):
        return self._knowledge

    @property
    def state(self):
        return self._history[-1]

    @property
    def steps(self):
        return len(self._history) // 2

    @property
    def done(self):
        return self.state in self.system.goal

    def next_action(self):
        """Returns the action the plan takes now.

        Returns:
            The action index, or None when the goal is reached, the horizon
            is used up or the plan has no entry for the history.
        """
        if self.done or self.steps >= self.plan.horizon:
            return None

        self._pending = self.plan.get(self._history)
        return self._pending

    def observe(self, state):
        """Records the state the last action led to.

        Raises:
            ValidationError: If no action is pending, or no behavior still
                considered explains the observation.
        """
        if self._pending is None:
            raise ValidationError('no action is pending')
        if not isinstance(state, int) or not (0 <= state < self.system.t):
            raise ValidationError('unknown state {!r}'.format(state))

        a = self._pending
        q = self.state
        behaviors = self.system.behaviors
        consistent = frozenset(
            b for b in self._knowledge if behaviors[b].table[q][a] == state
        )
        if not consistent:
            raise ValidationError(
                'observation {!r} after {!r} is not explained by any '
                'remaining behavior'.format(self.system.states[state],
                                            self.system.actions[a])
            )

        narrowed = consistent != self._knowledge
        self._knowledge = consistent
        self._history = self._history + (a, state)
        self._pending = None

        if narrowed:
            self.learned.append(self.steps)
            printf('Step {}: knowledge narrowed to {}'.format(
                self.steps, sorted(consistent)),
                print_type=PrintType.DEBUG_LOG)

    def run(self, world):
        """Drives the plan against a behavior index standing in for the world.

        Returns:
            The final history.
        """
        table = self.system.behaviors[world].table
        a = self.next_action()
        while a is not None:
            self.observe(table[self.state][a])
            a = self.next_action()
        return self._history
