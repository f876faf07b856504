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


import enum
import json
import logging
import sys

from colorama import Fore

from pwl.settings import SettingsManager, get_constant


class PrintType(enum.IntEnum):
    # STDERR
    NORMAL = 1 << 1
    WARNING = 1 << 2
    ERROR = 1 << 3

    # LOG File
    DEBUG_LOG = 1 << 4
    INFO_LOG = 1 << 5
    ERROR_LOG = 1 << 6


def printf(*args, print_type=PrintType.NORMAL, **kwargs):
    """Prints diagnostics to STDERR or log file depending on `print_type`.

    STDOUT is reserved for JSON results, so terminal diagnostics always go to
    STDERR.

    Args:
        args: Arguments to pass to the print and/or log function.
        print_type: Where and how to output the text.
        kwargs: Keyword arguments to pass to the print and/or log function.
    """
    args = [a.strip() if isinstance(a, str) else a for a in args]
    silent = SettingsManager.get('silent')
    log_enabled = SettingsManager.get('log_enabled')

    if not silent:
        if print_type & PrintType.NORMAL:
            print(*args, file=sys.stderr, **kwargs)

        if print_type & PrintType.WARNING:
            print(*[Fore.YELLOW + str(a) + Fore.RESET for a in args],
                  file=sys.stderr, **kwargs)

        if print_type & PrintType.ERROR:
            print(*[Fore.RED + str(a) + Fore.RESET for a in args],
                  file=sys.stderr, **kwargs)

    if log_enabled:
        if print_type & PrintType.ERROR_LOG:
            logging.error('ERROR: ' + str(args[0]), *args[1:], **kwargs)

        if print_type & PrintType.INFO_LOG:
            logging.info(*args, **kwargs)

        if print_type & PrintType.DEBUG_LOG:
            logging.debug(*args, **kwargs)


def dumps(obj):
    """Serializes an object as stable JSON (sorted keys, fixed indentation).

    Args:
        obj: The JSON-compatible object.

    Returns:
        The JSON text, newline terminated.
    """
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def write_json(obj, out=None):
    """Writes an object as stable JSON to a file or STDOUT.

    Args:
        obj: The JSON-compatible object.
        out: The output file path. Writes to STDOUT if not given.
    """
    text = dumps(obj)

    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    with open(out, 'w', encoding='utf-8') as f:
        f.write(text)

    printf('Wrote {}'.format(out), print_type=PrintType.INFO_LOG)


def history_to_names(history, states, actions):
    """Converts a history key into its alternating list of names.

    Args:
        history: The history key.
        states: The state names.
        actions: The action names.

    Returns:
        A list of names.
    """
    return [
        states[x] if i % 2 == 0 else actions[x]
        for i, x in enumerate(history)
    ]


def system_to_dict(system):
    """Converts a PwlSystem into the system file format.

    Args:
        system: The system.

    Returns:
        A JSON-compatible dictionary.
    """
    sep = get_constant('history_separator')
    states, actions = system.states, system.actions

    behaviors = []
    for behavior in system.behaviors:
        table = {}
        for q, row in enumerate(behavior.table):
            for a, nq in enumerate(row):
                table['{}{}{}'.format(states[q], sep, actions[a])] = states[nq]
        behaviors.append({'name': behavior.name, 'table': table})

    return {
        'states': list(states),
        'actions': list(actions),
        'initial': states[system.initial],
        'goal': [states[q] for q in sorted(system.goal)],
        'behaviors': behaviors
    }


def plan_to_dict(plan, states, actions):
    """Converts a PlanTable into the plan file format.

    Args:
        plan: The plan.
        states: The state names.
        actions: The action names.

    Returns:
        A JSON-compatible dictionary.
    """
    return {
        'horizon': plan.horizon,
        'entries': [
            {
                'history': history_to_names(h, states, actions),
                'action': actions[a]
            }
            for h, a in plan.sorted_entries()
        ]
    }


def trace_to_dict(trace, states, actions, behaviors):
    """Converts a Trace into a JSON-compatible dictionary.

    Args:
        trace: The trace.
        states: The state names.
        actions: The action names.
        behaviors: The behavior names.

    Returns:
        A JSON-compatible dictionary.
    """
    ret = {
        'behavior': behaviors[trace.behavior],
        'steps': [
            {'state': states[q], 'action': actions[a]}
            for q, a in trace.steps
        ],
        'final_state': states[trace.final_state],
        'outcome': trace.outcome.value,
        'goal_step': trace.goal_step,
        'undefined_history': None
    }

    if trace.undefined_history is not None:
        ret['undefined_history'] = history_to_names(
            trace.undefined_history, states, actions
        )

    if trace.hidden:
        ret['hidden'] = [behaviors[b] for b in trace.hidden]

    return ret


def verdict_to_dict(verdict, states, actions, behaviors):
    """Converts a Verdict into a JSON-compatible dictionary.

    Failing traces are repeated under `failures` so a designer can patch
    exactly the failing branches.

    Args:
        verdict: The verdict.
        states: The state names.
        actions: The action names.
        behaviors: The behavior names.

    Returns:
        A JSON-compatible dictionary.
    """
    traces = [trace_to_dict(t, states, actions, behaviors)
              for t in verdict.traces]
    return {
        'satisfactory': verdict.satisfactory,
        'satisfied_count': verdict.satisfied_count,
        'satisfied_fraction': verdict.satisfied_fraction,
        'threshold': verdict.threshold,
        'step_count': verdict.step_count,
        'traces': traces,
        'failures': [
            td for t, td in zip(verdict.traces, traces) if not t.succeeded
        ]
    }


def tree_to_dict(node, states, actions, behaviors):
    """Converts a decision tree node (recursively) into a dictionary.

    Args:
        node: The TreeNode.
        states: The state names.
        actions: The action names.
        behaviors: The behavior names.

    Returns:
        A JSON-compatible dictionary.
    """
    return {
        'state': states[node.state],
        'knowledge': [behaviors[b] for b in sorted(node.knowledge)],
        'action': None if node.action is None else actions[node.action],
        'leaf': None if node.leaf is None else node.leaf.value,
        'children': [
            {
                'observed': states[observed],
                'node': tree_to_dict(child, states, actions, behaviors)
            }
            for observed, child in node.children
        ]
    }


def extended_system_to_dict(es):
    """Converts an ExtendedSystem into the extended system file format."""
    sep = get_constant('history_separator')
    states, actions, ids = es.states, es.actions, es.behavior_ids

    gamma = {}
    for q, qname in enumerate(states):
        for b, bname in enumerate(ids):
            for a, aname in enumerate(actions):
                nq, nb = es.transition(q, b, a)
                gamma[sep.join((qname, bname, aname))] = sep.join(
                    (states[nq], ids[nb])
                )

    return {
        'states': list(states),
        'actions': list(actions),
        'initial': states[es.initial],
        'goal': [states[q] for q in sorted(es.goal)],
        'behavior_ids': list(ids),
        'initial_candidates': [ids[b] for b in sorted(es.initial_candidates)],
        'gamma': gamma
    }


def multiagent_system_to_dict(ms):
    """Converts a MultiAgentSystem into the multi-agent file format."""
    sep = get_constant('history_separator')
    states1, states2 = ms.states
    actions, ids = ms.actions, ms.behavior_ids

    gamma = {}
    for (q1, q2, b, a1, a2), (n1, n2, nb) in sorted(ms.gamma.items()):
        key = sep.join((states1[q1], states2[q2], ids[b], actions[a1],
                        actions[a2]))
        gamma[key] = sep.join((states1[n1], states2[n2], ids[nb]))

    agents = []
    for states, initials, goals in zip(ms.states, ms.initials, ms.goals):
        agents.append({
            'states': list(states),
            'initial': [states[q] for q in initials],
            'goals': [
                {'name': g.name, 'states': [states[q] for q in sorted(g.states)]}
                for g in goals
            ]
        })

    return {
        'agents': agents,
        'actions': list(actions),
        'behavior_ids': list(ids),
        'initial_behaviors': [ids[b] for b in ms.initial_behaviors],
        'gamma_m': gamma
    }


def ma_verdict_to_dict(verdict, ms):
    """Converts a MaVerdict into a JSON-compatible dictionary.

    Args:
        verdict: The MaVerdict.
        ms: The MultiAgentSystem the verdict is about.

    Returns:
        A JSON-compatible dictionary.
    """
    results = []
    for r in verdict.results:
        own_states = ms.states[r.agent - 1]
        opp_states = ms.states[2 - r.agent]
        results.append({
            'agent': r.agent,
            'goal': ms.goals[r.agent - 1][r.goal].name,
            'plan': r.plan,
            'designated': r.designated,
            'counterexamples': [
                {
                    'plan': c.plan,
                    'opponent_plan': c.opponent_plan,
                    'own_initial': own_states[c.own_initial],
                    'opponent_initial': opp_states[c.opponent_initial],
                    'behavior': ms.behavior_ids[c.behavior]
                }
                for c in r.counterexamples
            ]
        })

    return {
        'satisfactory': verdict.satisfactory,
        'horizon': verdict.horizon,
        'results': results
    }
