"""Index aliases and small systems shared by the tests."""

import numpy as np

from pwl.domains import multiagent_from_function
from pwl.model import BehaviorTable, PwlSystem
from pwl.plan import PlanTable


# The intro system.
S0, SA, SB, GA, GB, DEAD = range(6)
C, D, X, Y = range(4)
E1, E2 = range(2)


def intro_plan_table():
    """Takes c, returns with d, then commits with x after sA and y after sB."""
    return PlanTable({
        (S0,): C,
        (S0, C, SA): D,
        (S0, C, SB): D,
        (S0, C, SA, D, S0): X,
        (S0, C, SB, D, S0): Y
    }, 3)


def gen_fork(goals=(('gl', ['l']), ('gr', ['r']))):
    """Each agent independently walks from s to l or r."""
    def step(q1, q2, b, a1, a2):
        def move(q, a):
            if q != 's':
                return q
            return 'l' if a == 'left' else 'r'
        return move(q1, a1), move(q2, a2), b

    return multiagent_from_function(
        ['s', 'l', 'r'], ['s', 'l', 'r'], ['left', 'right'], ['s'], ['s'],
        ['e'], ['e'], step, goals, goals
    )


def gen_mirror():
    """Each agent's first move is decided by the other agent's action."""
    def step(q1, q2, b, a1, a2):
        def move(q, a):
            if q != 's':
                return q
            return 'l' if a == 'left' else 'r'
        return move(q1, a2), move(q2, a1), b

    goals = [('gl', ['l']), ('gr', ['r'])]
    return multiagent_from_function(
        ['s', 'l', 'r'], ['s', 'l', 'r'], ['left', 'right'], ['s'], ['s'],
        ['e'], ['e'], step, goals, goals
    )


def gen_deadlock():
    """Nothing ever moves, and no goal holds initially."""
    goals = [('gx', ['x']), ('gy', ['y'])]
    return multiagent_from_function(
        ['i', 'x', 'y'], ['i', 'x', 'y'], ['push', 'pull'], ['i'], ['i'],
        ['stuck'], ['stuck'], lambda q1, q2, b, a1, a2: (q1, q2, b),
        goals, goals
    )


def gen_ring(n, idle=False):
    """A single behavior walks q0, q1, ... to the goal q(n-1) under `next`;
    `stay` (when present) keeps the current state."""
    actions = ['next', 'stay'] if idle else ['next']
    table = [[min(q + 1, n - 1), q][:len(actions)] for q in range(n)]
    return PwlSystem(['q{}'.format(q) for q in range(n)], actions, 0,
                     [BehaviorTable('e', table)], [n - 1])


def random_plan(system, seed, horizon, stop=0.1, extra=3):
    """Draws a conditional plan with random actions along every run.

    A run stops early with probability `stop` at each history the plan does
    not cover yet, leaving it undefined. `extra` entries below the initial
    state are added whether or not a run consults them.
    """
    rng = np.random.default_rng(seed)
    n_actions = len(system.actions)
    entries = {}

    for behavior in system.behaviors:
        q = system.initial
        h = (q,)
        for _ in range(horizon):
            if q in system.goal:
                break
            if h not in entries:
                if rng.random() < stop:
                    break
                entries[h] = int(rng.integers(n_actions))
            a = entries[h]
            q = behavior.table[q][a]
            h = h + (a, q)

    if horizon > 0:
        for _ in range(extra):
            h = (system.initial, int(rng.integers(n_actions)),
                 int(rng.integers(len(system.states))))
            entries.setdefault(h, int(rng.integers(n_actions)))

    return PlanTable(entries, horizon)
