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

"""Two-agent Planning-while-Learning systems.

Agents are numbered 1 and 2. Each agent observes only its own state, both
draw actions from one shared alphabet, and the joint transition advances
(agent 1 state, agent 2 state, behavior) from the pair of actions. Each agent
has a family of possible goals; a multi-agent plan gives every agent a set of
single-agent plans over its own histories.
"""

from collections import namedtuple
import itertools

from pwl.errors import CapExceededError, SizeLimitError, ValidationError
from pwl.model import validate_names
from pwl.output import printf, PrintType
from pwl.plan import check_plan, PlanTable
from pwl.settings import (
    SettingsManager,
    get_constant,
    get_formatter
)
from pwl.util import pool_map


AGENTS = (1, 2)

MaGoal = namedtuple('MaGoal', ('name', 'states'))

AgentView = namedtuple('AgentView', ('states', 'actions', 'initial'))

JointTrace = namedtuple('JointTrace', (
    'initials', 'behavior', 'steps', 'final', 'visits', 'undefined_agent',
    'undefined_history'
))
JointTrace.__doc__ = """The joint run of two plans.

Args:
    initials: The (agent 1, agent 2) initial states.
    behavior: The initial behavior index.
    steps: Tuple of (q1, q2, b, a1, a2), in execution order.
    final: The final (q1, q2, b).
    visits: Pair of tuples, one per agent; entry g is the first step at which
        the agent was in goal g, or None.
    undefined_agent: The agent whose plan had no entry, or None.
    undefined_history: That agent's history, or None.
"""

Counterexample = namedtuple('Counterexample', (
    'plan', 'opponent_plan', 'own_initial', 'opponent_initial', 'behavior'
))

GoalResult = namedtuple('GoalResult', (
    'agent', 'goal', 'plan', 'designated', 'counterexamples'
))
GoalResult.__doc__ = """The verification result of one (agent, goal) pair.

Args:
    agent: 1 or 2.
    goal: The goal index in the agent's goal family.
    plan: Index of the plan that succeeds, or None.
    designated: Whether the plan candidates came from a designation.
    counterexamples: Tuple of Counterexample, the first failing combination
        of each rejected candidate plan.
"""

MaVerdict = namedtuple('MaVerdict', ('results', 'satisfactory', 'horizon'))


def _other(agent):
    return 3 - agent


def _check_agent(agent):
    if agent not in AGENTS:
        raise ValidationError('agent must be 1 or 2, got {!r}'.format(agent))


def _check_indices(values, bound, kind):
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) \
                or not (0 <= v < bound):
            raise ValidationError('{} {!r} is out of range'.format(kind, v))


class MultiAgentSystem:
    """A two-agent system with a joint transition.

    Args:
        states1: Agent 1 state names.
        states2: Agent 2 state names.
        actions: Shared action names.
        initials1: Candidate initial state indices of agent 1.
        initials2: Candidate initial state indices of agent 2.
        behavior_ids: Behavior names.
        initial_behaviors: Candidate initial behavior indices.
        gamma: Mapping (q1, q2, b, a1, a2) -> (q1', q2', b'), total.
        goals1: Sequence of (name, state indices) goals of agent 1.
        goals2: Sequence of (name, state indices) goals of agent 2.

    Raises:
        ValidationError: If an invariant is violated.
        CapExceededError: If initial states, goals or behaviors exceed the
            declared caps.
    """
    def __init__(self, states1, states2, actions, initials1, initials2,
                 behavior_ids, initial_behaviors, gamma, goals1, goals2):
        self.states = (tuple(states1), tuple(states2))
        self.actions = tuple(actions)
        self.initials = (tuple(sorted(set(initials1))),
                         tuple(sorted(set(initials2))))
        self.behavior_ids = tuple(behavior_ids)
        self.initial_behaviors = tuple(sorted(set(initial_behaviors)))
        self.gamma = {tuple(k): tuple(v) for k, v in dict(gamma).items()}
        self.goals = (
            tuple(MaGoal(name, frozenset(g)) for name, g in goals1),
            tuple(MaGoal(name, frozenset(g)) for name, g in goals2)
        )
        self.validate()

    def agent_states(self, agent):
        return self.states[agent - 1]

    def agent_initials(self, agent):
        return self.initials[agent - 1]

    def agent_goals(self, agent):
        return self.goals[agent - 1]

    def agent_view(self, agent):
        """Returns the single-agent shape plans of `agent` are checked
        against."""
        return AgentView(self.states[agent - 1], self.actions,
                         self.initials[agent - 1][0])

    def transition(self, q1, q2, b, a1, a2):
        return self.gamma[(q1, q2, b, a1, a2)]

    def goal_index(self, agent, name):
        for g, goal in enumerate(self.goals[agent - 1]):
            if goal.name == name:
                return g
        raise ValidationError(
            'agent {} has no goal {!r}'.format(agent, name)
        )

    def validate(self):
        validate_names(self.states[0], 'agent 1 state')
        validate_names(self.states[1], 'agent 2 state')
        validate_names(self.actions, 'action')
        validate_names(self.behavior_ids, 'behavior')

        if not self.actions or not self.behavior_ids:
            raise ValidationError('multi-agent system needs actions and '
                                  'behaviors')

        caps = (
            ('initial states', self.initials, 'ma_max_initials'),
            ('goals', self.goals, 'ma_max_goals'),
        )
        for kind, per_agent, cap_name in caps:
            cap = get_constant(cap_name)
            for agent, values in zip(AGENTS, per_agent):
                if not values:
                    raise ValidationError(
                        'agent {} has no {}'.format(agent, kind)
                    )
                if len(values) > cap:
                    raise CapExceededError(
                        'agent {} has {} {}, cap is {}'
                        .format(agent, len(values), kind, cap)
                    )

        max_behaviors = get_constant('ma_max_behaviors')
        if len(self.behavior_ids) > max_behaviors:
            raise CapExceededError(
                '{} behaviors exceed cap {}'.format(len(self.behavior_ids),
                                                    max_behaviors)
            )
        if not self.initial_behaviors:
            raise ValidationError('no candidate initial behaviors')

        n_behaviors = len(self.behavior_ids)
        n_actions = len(self.actions)
        t1, t2 = len(self.states[0]), len(self.states[1])

        _check_indices(self.initial_behaviors, n_behaviors, 'behavior')
        for agent, t in zip(AGENTS, (t1, t2)):
            _check_indices(self.initials[agent - 1], t,
                           'agent {} initial state'.format(agent))
            validate_names([g.name for g in self.goals[agent - 1]],
                           'agent {} goal'.format(agent))
            for goal in self.goals[agent - 1]:
                _check_indices(goal.states, t,
                               'agent {} goal state'.format(agent))

        for key in itertools.product(range(t1), range(t2), range(n_behaviors),
                                     range(n_actions), range(n_actions)):
            value = self.gamma.get(key)
            if value is None:
                raise ValidationError(
                    'joint transition is undefined at {!r}'.format(key)
                )
            if len(value) != 3 or not (0 <= value[0] < t1) \
                    or not (0 <= value[1] < t2) \
                    or not (0 <= value[2] < n_behaviors):
                raise ValidationError(
                    'joint transition at {!r} yields {!r}'.format(key, value)
                )

        expected = t1 * t2 * n_behaviors * n_actions * n_actions
        if len(self.gamma) != expected:
            raise ValidationError('joint transition has unknown keys')

    def __repr__(self):
        return 'MultiAgentSystem(t=({}, {}), actions={}, behaviors={})'.format(
            len(self.states[0]), len(self.states[1]), len(self.actions),
            len(self.behavior_ids)
        )


class MultiAgentPlan:
    """One set of single-agent plans per agent.

    Args:
        plans1: Sequence of PlanTable over agent 1 histories.
        plans2: Sequence of PlanTable over agent 2 histories.
        designation1: Optional mapping goal index -> plan index for agent 1.
        designation2: Optional mapping goal index -> plan index for agent 2.
    """
    def __init__(self, plans1, plans2, designation1=None, designation2=None):
        self.plans = (tuple(plans1), tuple(plans2))
        self.designations = (dict(designation1 or {}),
                             dict(designation2 or {}))

    def agent_plans(self, agent):
        return self.plans[agent - 1]

    def agent_designation(self, agent):
        return self.designations[agent - 1]

    def __repr__(self):
        return 'MultiAgentPlan(plans=({}, {}))'.format(len(self.plans[0]),
                                                       len(self.plans[1]))


def check_multiagent_plan(ms, mp):
    """Checks a multi-agent plan against a system.

    Raises:
        ValidationError: If a plan set is empty, a plan key references
            states of the wrong agent, or a designation is out of range.
    """
    for agent in AGENTS:
        plans = mp.agent_plans(agent)
        if not plans:
            raise ValidationError('agent {} has no plans'.format(agent))

        view = ms.agent_view(agent)
        for plan in plans:
            check_plan(view, plan, ms.agent_initials(agent))

        n_goals = len(ms.agent_goals(agent))
        for g, p in mp.agent_designation(agent).items():
            if not (0 <= g < n_goals) or not (0 <= p < len(plans)):
                raise ValidationError(
                    'agent {} designation {!r} -> {!r} is out of range'
                    .format(agent, g, p)
                )


def joint_simulate(ms, p1, p2, i1, i2, b0, horizon):
    """Runs two plans together for `horizon` joint steps.

    Both agents act at every step, also after visiting a goal. The run stops
    early only when a plan has no entry for its agent's history.

    Args:
        ms: The MultiAgentSystem.
        p1: Agent 1's PlanTable.
        p2: Agent 2's PlanTable.
        i1: Agent 1's initial state.
        i2: Agent 2's initial state.
        b0: The initial behavior.
        horizon: Number of joint steps.

    Returns:
        A JointTrace.

    Raises:
        IndexError: If an initial state or behavior is not a candidate.
    """
    if i1 not in ms.initials[0] or i2 not in ms.initials[1] \
            or b0 not in ms.initial_behaviors:
        raise IndexError(
            'initial configuration {!r} is not a candidate'
            .format((i1, i2, b0))
        )

    q1, q2, b = i1, i2, b0
    h1, h2 = (q1,), (q2,)
    steps = []
    visits = ([None] * len(ms.goals[0]), [None] * len(ms.goals[1]))
    undefined_agent = undefined_history = None

    def record(k):
        for agent_visits, goals, q in zip(visits, ms.goals, (q1, q2)):
            for g, goal in enumerate(goals):
                if agent_visits[g] is None and q in goal.states:
                    agent_visits[g] = k

    record(0)
    for k in range(horizon):
        a1, a2 = p1.get(h1), p2.get(h2)
        if a1 is None:
            undefined_agent, undefined_history = 1, h1
            break
        if a2 is None:
            undefined_agent, undefined_history = 2, h2
            break

        steps.append((q1, q2, b, a1, a2))
        q1, q2, b = ms.transition(q1, q2, b, a1, a2)
        h1 = h1 + (a1, q1)
        h2 = h2 + (a2, q2)
        record(k + 1)

    return JointTrace((i1, i2), b0, tuple(steps), (q1, q2, b),
                      (tuple(visits[0]), tuple(visits[1])), undefined_agent,
                      undefined_history)


def _joint_runs(ms, plans1, plans2, horizon):
    """Runs every combination of plans, initial states and behaviors.

    Returns:
        Dict (plan1, plan2, i1, i2, b0) -> JointTrace.
    """
    keys = list(itertools.product(range(len(plans1)), range(len(plans2)),
                                  ms.initials[0], ms.initials[1],
                                  ms.initial_behaviors))
    traces = pool_map(
        lambda k: joint_simulate(ms, plans1[k[0]], plans2[k[1]], k[2], k[3],
                                 k[4], horizon),
        keys, SettingsManager.get('workers')
    )
    return dict(zip(keys, traces))


def _orient(agent, own, opp):
    """Orders an (own, opponent) pair as (agent 1, agent 2)."""
    return (own, opp) if agent == 1 else (opp, own)


def ma_verify(ms, mp, horizon=None):
    """Verifies a multi-agent plan.

    For each agent and each of its goals, some candidate plan must visit the
    goal within `horizon` steps against every plan of the other agent, every
    pair of initial states and every initial behavior. Candidates are the
    designated plan when there is one, otherwise the whole plan set.

    Args:
        ms: The MultiAgentSystem.
        mp: The MultiAgentPlan.
        horizon: Number of joint steps. Defaults to the largest plan horizon.

    Returns:
        A MaVerdict with one GoalResult per (agent, goal).

    Raises:
        ValidationError: On an empty plan set or a plan referencing states
            of the other agent.
    """
    check_multiagent_plan(ms, mp)

    if horizon is None:
        horizon = max(p.horizon for plans in mp.plans for p in plans)

    runs = _joint_runs(ms, mp.plans[0], mp.plans[1], horizon)
    results = []

    for agent in AGENTS:
        opponent = _other(agent)
        own_plans = mp.agent_plans(agent)
        designation = mp.agent_designation(agent)

        for g in range(len(ms.agent_goals(agent))):
            designated = g in designation
            candidates = [designation[g]] if designated \
                else range(len(own_plans))

            chosen = None
            counterexamples = []
            for p in candidates:
                failure = None
                for q, own_init, opp_init, b0 in itertools.product(
                    range(len(mp.agent_plans(opponent))),
                    ms.agent_initials(agent), ms.agent_initials(opponent),
                    ms.initial_behaviors
                ):
                    p1, p2 = _orient(agent, p, q)
                    i1, i2 = _orient(agent, own_init, opp_init)
                    trace = runs[(p1, p2, i1, i2, b0)]
                    if trace.visits[agent - 1][g] is None:
                        failure = Counterexample(p, q, own_init, opp_init, b0)
                        break

                if failure is None:
                    chosen = p
                    break
                counterexamples.append(failure)

            results.append(GoalResult(agent, g, chosen, designated,
                                      tuple(counterexamples)))

    satisfactory = all(r.plan is not None for r in results)

    printf('Verified multi-agent plan: {} of {} (agent, goal) pairs covered'
           .format(sum(r.plan is not None for r in results), len(results)),
           print_type=PrintType.INFO_LOG)

    return MaVerdict(tuple(results), satisfactory, horizon)


def reduce_goals(ms):
    """Transforms a system so each agent has a single goal.

    Every agent state is paired with a phase: ``start``, ``observe`` for one
    of the agent's goals, or ``goal``; one extra state per agent is the
    absorbing fail marker. Behaviors become (behavior, goal of agent 1, goal
    of agent 2) triples. An agent must play the new observe action first,
    which reveals its goal through the phase; any other first action sends
    it to the fail marker. The underlying system only moves when both agents
    play original actions past their start phase. The phase becomes ``goal``
    once the agent is in a state of its revealed goal.

    Args:
        ms: The MultiAgentSystem.

    Returns:
        A MultiAgentSystem where each agent has the single goal of all
        ``goal`` phase states.

    Raises:
        CapExceededError: If the product behaviors exceed the cap.
    """
    observe_name = get_constant('observe_action')
    if observe_name in ms.actions:
        raise ValidationError(
            'action name {!r} is reserved'.format(observe_name)
        )

    n_goals = tuple(len(goals) for goals in ms.goals)
    n_states = tuple(len(states) for states in ms.states)
    n_behaviors = len(ms.behavior_ids)
    n_actions = len(ms.actions)
    observe = n_actions

    # Phases per agent: 0 is start, 1..n observe goal j-1, n+1 goal.
    def width(i):
        return n_goals[i] + 2

    def encode(i, q, phase):
        return q * width(i) + phase

    def fail(i):
        return n_states[i] * width(i)

    def decode(i, x):
        if x == fail(i):
            return None
        return divmod(x, width(i))

    states = []
    for i in range(2):
        names = []
        for q, qname in enumerate(ms.states[i]):
            names.append(get_formatter('reduced_start').format(qname))
            names.extend(
                get_formatter('reduced_observe').format(qname, goal.name)
                for goal in ms.goals[i]
            )
            names.append(get_formatter('reduced_goal').format(qname))
        names.append(get_formatter('reduced_fail').format(i + 1))
        states.append(names)

    def pack(b, g1, g2):
        return (b * n_goals[0] + g1) * n_goals[1] + g2

    behavior_ids = [
        get_formatter('reduced_behavior').format(
            ms.behavior_ids[b], ms.goals[0][g1].name, ms.goals[1][g2].name
        )
        for b in range(n_behaviors)
        for g1 in range(n_goals[0])
        for g2 in range(n_goals[1])
    ]
    max_behaviors = get_constant('ma_max_behaviors')
    if len(behavior_ids) > max_behaviors:
        raise CapExceededError(
            'reduced system needs {} behaviors, cap is {}'
            .format(len(behavior_ids), max_behaviors)
        )

    def advance_phase(i, decoded, a, q_next, g):
        """Returns the encoded state of agent i after the step."""
        if decoded is None:
            return fail(i)
        _, phase = decoded
        if phase == 0:
            if a != observe:
                return fail(i)
            phase = 1 + g
        if 1 <= phase <= n_goals[i] and q_next in ms.goals[i][phase - 1].states:
            phase = n_goals[i] + 1
        return encode(i, q_next, phase)

    gamma = {}
    for x1, x2 in itertools.product(range(fail(0) + 1), range(fail(1) + 1)):
        d1, d2 = decode(0, x1), decode(1, x2)
        for b, g1, g2 in itertools.product(range(n_behaviors),
                                           range(n_goals[0]),
                                           range(n_goals[1])):
            for a1, a2 in itertools.product(range(n_actions + 1), repeat=2):
                moves = (d1 is not None and d2 is not None
                         and d1[1] != 0 and d2[1] != 0
                         and a1 != observe and a2 != observe)
                if moves:
                    nq1, nq2, nb = ms.transition(d1[0], d2[0], b, a1, a2)
                else:
                    nq1 = d1[0] if d1 is not None else None
                    nq2 = d2[0] if d2 is not None else None
                    nb = b

                gamma[(x1, x2, pack(b, g1, g2), a1, a2)] = (
                    advance_phase(0, d1, a1, nq1, g1),
                    advance_phase(1, d2, a2, nq2, g2),
                    pack(nb, g1, g2)
                )

    goal_name = get_constant('reduced_goal_name')
    goals = [
        [(goal_name, [encode(i, q, width(i) - 1)
                      for q in range(n_states[i])])]
        for i in range(2)
    ]

    reduced = MultiAgentSystem(
        states[0], states[1], list(ms.actions) + [observe_name],
        [encode(0, q, 0) for q in ms.initials[0]],
        [encode(1, q, 0) for q in ms.initials[1]],
        behavior_ids,
        [pack(b, g1, g2) for b in ms.initial_behaviors
         for g1 in range(n_goals[0]) for g2 in range(n_goals[1])],
        gamma, goals[0], goals[1]
    )

    printf('Reduced goals: {} -> {}'.format(ms, reduced),
           print_type=PrintType.DEBUG_LOG)

    return reduced


def _agent_children(ms, agent, configs, a):
    """Groups the configurations reachable under an own action.

    The opponent's action is arbitrary.

    Returns:
        List of (own next state, frozenset of configurations), in state
        order.
    """
    groups = {}
    for q1, q2, b in configs:
        for opp in range(len(ms.actions)):
            a1, a2 = _orient(agent, a, opp)
            nxt = ms.transition(q1, q2, b, a1, a2)
            groups.setdefault(nxt[agent - 1], set()).add(nxt)

    return [(q, frozenset(groups[q])) for q in sorted(groups)]


def _distinct_actions(ms, agent, configs):
    """Drops actions whose joint effect equals that of an earlier action."""
    seen = set()
    distinct = []
    for a in range(len(ms.actions)):
        effect = tuple(
            ms.transition(q1, q2, b, *_orient(agent, a, opp))
            for q1, q2, b in sorted(configs)
            for opp in range(len(ms.actions))
        )
        if effect not in seen:
            seen.add(effect)
            distinct.append(a)
    return distinct


def _root_configs(ms, agent, q):
    return frozenset(
        _orient(agent, q, r) + (b,)
        for r in ms.agent_initials(_other(agent))
        for b in ms.initial_behaviors
    )


def plan_from_state_policy(ms, agent, policy, horizon):
    """Builds an agent plan that picks actions from its current state only.

    Every history the agent can observe within `horizon` steps, whatever
    the other agent does, gets an entry.

    Args:
        ms: The MultiAgentSystem.
        agent: 1 or 2.
        policy: Mapping own state index -> action index.
        horizon: The plan horizon.

    Returns:
        A PlanTable.

    Raises:
        ValidationError: If the policy misses a reachable state.
    """
    _check_agent(agent)
    entries = {}
    stack = [((q,), _root_configs(ms, agent, q), 0)
             for q in ms.agent_initials(agent)]

    while stack:
        history, configs, depth = stack.pop()
        if depth == horizon:
            continue
        q = history[-1]
        if q not in policy:
            raise ValidationError(
                'policy has no action for state {!r}'
                .format(ms.agent_states(agent)[q])
            )
        a = policy[q]
        entries[history] = a
        stack.extend((history + (a, nq), child, depth + 1)
                     for nq, child in _agent_children(ms, agent, configs, a))

    return PlanTable(entries, horizon)


def _count_plans(ms, agent, configs, depth):
    if depth == 0:
        return 1
    total = 0
    for a in _distinct_actions(ms, agent, configs):
        count = 1
        for _, child in _agent_children(ms, agent, configs, a):
            count *= _count_plans(ms, agent, child, depth - 1)
        total += count
    return total


def _enumerate_plans(ms, agent, history, configs, depth):
    """Yields every complete plan below a node, as entry dicts."""
    if depth == 0:
        yield {}
        return

    for a in _distinct_actions(ms, agent, configs):
        children = _agent_children(ms, agent, configs, a)
        subplans = [
            list(_enumerate_plans(ms, agent, history + (a, nq), child,
                                  depth - 1))
            for nq, child in children
        ]
        for combo in itertools.product(*subplans):
            entries = {history: a}
            for sub in combo:
                entries.update(sub)
            yield entries


def agent_plans(ms, agent, horizon, plan_cap=None):
    """Lists every complete agent plan of depth `horizon`, up to actions
    with identical joint effect.

    Raises:
        SizeLimitError: If there are more than `plan_cap` plans.
    """
    if plan_cap is None:
        plan_cap = get_constant('ma_plan_cap')

    roots = [((q,), _root_configs(ms, agent, q))
             for q in ms.agent_initials(agent)]

    total = 1
    for _, configs in roots:
        total *= _count_plans(ms, agent, configs, horizon)
        if total > plan_cap:
            raise SizeLimitError(
                'agent {} has more than {} plans of depth {}'
                .format(agent, plan_cap, horizon)
            )

    per_root = [list(_enumerate_plans(ms, agent, h, configs, horizon))
                for h, configs in roots]
    plans = []
    for combo in itertools.product(*per_root):
        entries = {}
        for sub in combo:
            entries.update(sub)
        plans.append(PlanTable(entries, horizon))
    return plans


def ma_brute_force_exists(ms, horizon, plan_cap=None):
    """Decides exactly whether a satisfactory multi-agent plan exists.

    Without loss of generality each agent holds one plan per goal. Plan g
    of agent 1 and plan h of agent 2 are compatible when, in every joint run
    of the two, agent 1 visits goal g and agent 2 visits goal h. A
    satisfactory plan is a choice of plans per goal that is pairwise
    compatible.

    Args:
        ms: A small MultiAgentSystem.
        horizon: Number of joint steps.
        plan_cap: Maximum number of plans enumerated per agent.

    Returns:
        True if a satisfactory multi-agent plan exists.

    Raises:
        SizeLimitError: If the system, horizon or plan count exceed the caps.
    """
    limits = (
        (max(len(s) for s in ms.states), 'ma_max_states', 'states'),
        (len(ms.actions), 'ma_max_actions', 'actions'),
        (horizon, 'ma_max_horizon', 'horizon'),
    )
    for value, cap_name, kind in limits:
        cap = get_constant(cap_name)
        if value > cap:
            raise SizeLimitError(
                '{} {} exceed brute force cap {}'.format(value, kind, cap)
            )

    plans1 = agent_plans(ms, 1, horizon, plan_cap)
    plans2 = agent_plans(ms, 2, horizon, plan_cap)
    runs = _joint_runs(ms, plans1, plans2, horizon)

    n1, n2 = len(ms.goals[0]), len(ms.goals[1])

    # masks[g][h][p1] holds bit p2 iff (p1, p2) serves goals g and h.
    masks = [[[0] * len(plans1) for _ in range(n2)] for _ in range(n1)]
    for p1, p2 in itertools.product(range(len(plans1)), range(len(plans2))):
        traces = [runs[(p1, p2, i1, i2, b0)]
                  for i1 in ms.initials[0] for i2 in ms.initials[1]
                  for b0 in ms.initial_behaviors]
        for g, h in itertools.product(range(n1), range(n2)):
            if all(t.visits[0][g] is not None and t.visits[1][h] is not None
                   for t in traces):
                masks[g][h][p1] |= 1 << p2

    full = (1 << len(plans2)) - 1

    def search(g, allowed):
        if not all(allowed):
            return False
        if g == n1:
            return True
        for p1 in range(len(plans1)):
            narrowed = [allowed[h] & masks[g][h][p1] for h in range(n2)]
            if search(g + 1, narrowed):
                return True
        return False

    found = search(0, [full] * n2)

    printf('Brute force over {} x {} plans: {}'
           .format(len(plans1), len(plans2), 'exists' if found else 'none'),
           print_type=PrintType.INFO_LOG)

    return found
