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

"""Generators for example and random systems.

Transitions left unspecified by a generator lead to an absorbing dead state.
"""

import itertools

import numpy as np

from pwl.errors import CapExceededError, ValidationError
from pwl.extended import ExtendedSystem
from pwl.model import BehaviorTable, PwlSystem
from pwl.multiagent import MultiAgentSystem
from pwl.output import printf, PrintType
from pwl.settings import get_constant, get_formatter


IDLE_ACTION = 'wait'


def _index(names, name, kind):
    try:
        return names.index(name)
    except ValueError:
        raise ValidationError('unknown {} {!r}'.format(kind, name))


def gen_intro_example():
    """Two behaviors that differ in where `c` leads; `x` and `y` commit to
    one of them.

    The only satisfactory plans take `c`, observe sA or sB, return with `d`
    and then take `x` after sA and `y` after sB.
    """
    dead = get_constant('dead_state')
    states = ['s0', 'sA', 'sB', 'gA', 'gB', dead]
    actions = ['c', 'd', 'x', 'y']
    s0, sa, sb, ga, gb, dd = range(len(states))
    c, d, x, y = range(len(actions))

    behaviors = []
    for name, after_c, after_x, after_y in (('E1', sa, ga, dd),
                                            ('E2', sb, dd, gb)):
        table = [[dd] * len(actions) for _ in states]
        table[s0][c] = after_c
        table[s0][x] = after_x
        table[s0][y] = after_y
        table[sa][d] = s0
        table[sb][d] = s0
        table[ga] = [ga] * len(actions)
        table[gb] = [gb] * len(actions)
        behaviors.append(BehaviorTable(name, table))

    return PwlSystem(states, actions, s0, behaviors, [ga, gb])


def gen_transport(vertices, edges, uncertain, start, target):
    """Builds a routing system with uncertain route end points.

    Args:
        vertices: Vertex names.
        edges: Sequence of (label, source, destination) routes; labels are
            the actions and must be unique.
        uncertain: Sequence of (label, alternative destinations). Each
            combination of alternatives is one behavior.
        start: The start vertex.
        target: The target vertex.

    Returns:
        A PwlSystem over the vertices plus a dead state.

    Raises:
        CapExceededError: If the combinations exceed the declared cap.
        ValidationError: If a name is unknown.
    """
    dead = get_constant('dead_state')
    states = list(vertices) + [dead]
    actions = [label for label, _, _ in edges]
    dead_index = len(states) - 1

    alternatives = []
    for label, ends in uncertain:
        a = _index(actions, label, 'route')
        alternatives.append([(a, _index(states, v, 'vertex')) for v in ends])

    count = 1
    for ends in alternatives:
        count *= len(ends)
    cap = get_constant('transport_max_behaviors')
    if count > cap:
        raise CapExceededError(
            '{} route combinations exceed cap {}'.format(count, cap)
        )

    base = [[dead_index] * len(actions) for _ in states]
    sources = {}
    for a, (_, src, dst) in enumerate(edges):
        u = _index(states, src, 'vertex')
        base[u][a] = _index(states, dst, 'vertex')
        sources[a] = u

    behaviors = []
    for k, combo in enumerate(itertools.product(*alternatives)):
        table = [list(row) for row in base]
        for a, v in combo:
            table[sources[a]][a] = v
        behaviors.append(BehaviorTable(
            get_formatter('transport_behavior').format(k), table
        ))

    system = PwlSystem(states, actions, _index(states, start, 'vertex'),
                       behaviors, [_index(states, target, 'vertex')])

    printf('Generated transport system {!r}'.format(system),
           print_type=PrintType.DEBUG_LOG)

    return system


def gen_random(seed, n_states, n_actions, n_behaviors, goal_density,
               idle=False):
    """Generates a random system, deterministic in the seed.

    Every transition is drawn uniformly and independently; each state is a
    goal with probability `goal_density`. The initial state is ``q0``.

    Args:
        seed: The random seed.
        n_states: Number of states.
        n_actions: Number of actions.
        n_behaviors: Number of behaviors.
        goal_density: Probability that a state is a goal, in [0, 1].
        idle: Adds a ``wait`` action that never changes the state.

    Returns:
        A PwlSystem.
    """
    if min(n_states, n_actions, n_behaviors) < 1:
        raise ValidationError('random system sizes must be at least 1')
    if not (0 <= goal_density <= 1):
        raise ValidationError(
            'goal density {!r} must be in [0, 1]'.format(goal_density)
        )

    rng = np.random.default_rng(seed)
    tables = rng.integers(0, n_states,
                          size=(n_behaviors, n_states, n_actions))
    goal_mask = rng.random(n_states) < goal_density

    states = [get_formatter('random_state').format(q)
              for q in range(n_states)]
    actions = [get_formatter('random_action').format(a)
               for a in range(n_actions)]

    if idle:
        loops = np.broadcast_to(np.arange(n_states)[None, :, None],
                                (n_behaviors, n_states, 1))
        tables = np.concatenate([tables, loops], axis=2)
        actions.append(IDLE_ACTION)

    behaviors = [
        BehaviorTable(get_formatter('random_behavior').format(b), table)
        for b, table in enumerate(tables.tolist())
    ]

    return PwlSystem(states, actions, 0, behaviors,
                     np.flatnonzero(goal_mask).tolist())


def gen_alarm_example():
    """An extended system where raising the alarm blocks every route.

    From ``s`` the route ``left`` reaches the goal only under ``calm_L`` and
    ``right`` only under ``calm_R``; ``inspect`` reveals which by moving to
    ``pl`` or ``pr``, and ``back`` returns to ``s``. The ``alarm`` action
    switches the behavior to ``alarmed``, where no route leads anywhere but
    to the dead state.
    """
    dead = get_constant('dead_state')
    states = ['s', 'pl', 'pr', 'g', dead]
    actions = ['alarm', 'inspect', 'back', 'left', 'right']
    behavior_ids = ['calm_L', 'calm_R', 'alarmed']
    s, pl, pr, g, dd = range(len(states))
    alarm, inspect, back, left, right = range(len(actions))
    calm_l, calm_r, alarmed = range(len(behavior_ids))

    gamma = [[[(dd, b)] * len(actions) for b in range(len(behavior_ids))]
             for _ in states]

    for b in range(len(behavior_ids)):
        gamma[s][b][alarm] = (s, alarmed)
        for q in (g, dd):
            gamma[q][b] = [(q, b)] * len(actions)

    for b, inspected, route in ((calm_l, pl, left), (calm_r, pr, right)):
        gamma[s][b][inspect] = (inspected, b)
        gamma[inspected][b][back] = (s, b)
        gamma[s][b][route] = (g, b)

    return ExtendedSystem(states, actions, s, [g], behavior_ids,
                          [calm_l, calm_r], gamma)


def multiagent_from_function(states1, states2, actions, initials1, initials2,
                             behavior_ids, initial_behaviors, step, goals1,
                             goals2):
    """Builds a MultiAgentSystem from names and a joint step function.

    Args:
        states1: Agent 1 state names.
        states2: Agent 2 state names.
        actions: Shared action names.
        initials1: Agent 1 initial state names.
        initials2: Agent 2 initial state names.
        behavior_ids: Behavior names.
        initial_behaviors: Initial behavior names.
        step: Function (q1, q2, b, a1, a2) -> (q1', q2', b') over names.
        goals1: Sequence of (goal name, state names) for agent 1.
        goals2: Sequence of (goal name, state names) for agent 2.

    Returns:
        A MultiAgentSystem.
    """
    states1, states2 = list(states1), list(states2)
    actions, behavior_ids = list(actions), list(behavior_ids)

    gamma = {}
    for key in itertools.product(range(len(states1)), range(len(states2)),
                                 range(len(behavior_ids)),
                                 range(len(actions)), range(len(actions))):
        q1, q2, b, a1, a2 = key
        n1, n2, nb = step(states1[q1], states2[q2], behavior_ids[b],
                          actions[a1], actions[a2])
        gamma[key] = (_index(states1, n1, 'agent 1 state'),
                      _index(states2, n2, 'agent 2 state'),
                      _index(behavior_ids, nb, 'behavior'))

    def goals(family, names):
        return [(name, [_index(names, q, 'state') for q in members])
                for name, members in family]

    return MultiAgentSystem(
        states1, states2, actions,
        [_index(states1, q, 'agent 1 state') for q in initials1],
        [_index(states2, q, 'agent 2 state') for q in initials2],
        behavior_ids,
        [_index(behavior_ids, b, 'behavior') for b in initial_behaviors],
        gamma, goals(goals1, states1), goals(goals2, states2)
    )


def gen_narrow_bridge(goals=None):
    """Two agents crossing a bridge one at a time.

    Each agent starts on the left bank ``L`` and may ``cross`` to the right
    bank ``R`` or ``wait``; ``R`` is absorbing. A lone crosser always gets
    through. When both cross at once under ``free``, agent 1 passes and the
    bridge becomes ``busy``; under ``busy`` both are blocked and the bridge
    becomes ``free`` again.

    Args:
        goals: Goal family used for both agents, as (name, state names).
            Defaults to the single goal ``far`` = {R}.
    """
    if goals is None:
        goals = [('far', ['R'])]

    def step(q1, q2, b, a1, a2):
        cross1 = q1 == 'L' and a1 == 'cross'
        cross2 = q2 == 'L' and a2 == 'cross'
        if cross1 and cross2:
            if b == 'free':
                return 'R', 'L', 'busy'
            return 'L', 'L', 'free'
        return ('R' if cross1 else q1), ('R' if cross2 else q2), b

    return multiagent_from_function(
        ['L', 'R'], ['L', 'R'], ['cross', 'wait'], ['L'], ['L'],
        ['free', 'busy'], ['free', 'busy'], step, goals, goals
    )


def gen_independent_product(system1, system2):
    """Runs two single-agent systems side by side without interaction.

    Both systems must declare the same actions. Behaviors are pairs of the
    two systems' behaviors; each agent has the single goal ``goal``.
    """
    if system1.actions != system2.actions:
        raise ValidationError('product systems must share their actions')

    pairs = list(itertools.product(range(system1.s), range(system2.s)))
    names = ['{}+{}'.format(system1.behavior_names[b1],
                            system2.behavior_names[b2]) for b1, b2 in pairs]
    n_actions = len(system1.actions)

    gamma = {}
    for q1, q2, b, a1, a2 in itertools.product(
        range(system1.t), range(system2.t), range(len(pairs)),
        range(n_actions), range(n_actions)
    ):
        b1, b2 = pairs[b]
        gamma[(q1, q2, b, a1, a2)] = (system1.step(b1, q1, a1),
                                      system2.step(b2, q2, a2), b)

    goal_name = get_constant('reduced_goal_name')
    return MultiAgentSystem(
        system1.states, system2.states, system1.actions,
        [system1.initial], [system2.initial], names, range(len(pairs)),
        gamma, [(goal_name, system1.goal)], [(goal_name, system2.goal)]
    )
