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

"""Loaders for system, plan, formula and bench files.

Malformed text or structure raises ParseError; well-formed input naming
unknown symbols or violating an invariant raises ValidationError.
"""

from configparser import ConfigParser, Error as ConfigParserError
import json
import os

from pwl.config.bench import BenchConfiguration
from pwl.errors import ParseError, ValidationError
from pwl.extended import ExtendedSystem
from pwl.model import BehaviorTable, PwlSystem
from pwl.multiagent import MultiAgentPlan, MultiAgentSystem
from pwl.output import printf, PrintType
from pwl.plan import PlanTable
from pwl.reductions import make_cnf
from pwl.settings import get_constant, match_regex
from pwl.util import cast_int


def read_file(input_file):
    """Reads a UTF-8 input file.

    Raises:
        ParseError: If the file does not exist or cannot be read.
    """
    printf('Reading input file {}'.format(input_file),
           print_type=PrintType.DEBUG_LOG)

    if not os.path.isfile(input_file):
        raise ParseError('Input file {} not found'.format(input_file))

    try:
        with open(input_file, encoding='utf-8') as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as err:
        raise ParseError('Unable to read {}: {}'.format(input_file, err))


def _load_json(text, kind):
    try:
        obj = json.loads(text)
    except (TypeError, ValueError) as err:
        raise ParseError('Malformed {} file: {}'.format(kind, err))

    if not isinstance(obj, dict):
        raise ParseError('{} file must hold a JSON object'.format(kind))
    return obj


def _require(obj, key, kind, expected=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError('{} is missing required key {!r}'.format(kind, key))

    value = obj[key]
    if expected is not None and not isinstance(value, expected):
        raise ParseError('{} key {!r} has the wrong type'.format(kind, key))
    return value


def _indexer(names, kind):
    """Returns a function resolving names to indices."""
    index = {n: i for i, n in enumerate(names) if isinstance(n, str)}

    def resolve(name):
        try:
            return index[name]
        except (KeyError, TypeError):
            raise ValidationError('unknown {} {!r}'.format(kind, name))
    return resolve


def _split_key(key, parts, kind):
    sep = get_constant('history_separator')
    if not isinstance(key, str) or key.count(sep) != parts - 1:
        raise ParseError('{} key {!r} must have {} parts separated by {!r}'
                         .format(kind, key, parts, sep))
    return key.split(sep)


def system_from_dict(obj):
    """Builds a PwlSystem from the system file structure.

    Raises:
        ParseError: If the structure is malformed.
        ValidationError: If names are unknown or invariants are violated.
    """
    kind = 'system'
    states = _require(obj, 'states', kind, list)
    actions = _require(obj, 'actions', kind, list)
    behaviors = _require(obj, 'behaviors', kind, list)
    goal = _require(obj, 'goal', kind, list)
    initial = _require(obj, 'initial', kind)

    state_of = _indexer(states, 'state')
    action_of = _indexer(actions, 'action')

    tables = []
    for behavior in behaviors:
        name = _require(behavior, 'name', 'behavior')
        transitions = _require(behavior, 'table', 'behavior', dict)

        table = [[None] * len(actions) for _ in states]
        for key, target in transitions.items():
            q, a = _split_key(key, 2, 'transition')
            table[state_of(q)][action_of(a)] = state_of(target)

        if any(nq is None for row in table for nq in row):
            raise ValidationError('non-total behavior {!r}'.format(name))
        tables.append(BehaviorTable(name, table))

    system = PwlSystem(states, actions, state_of(initial), tables,
                       [state_of(q) for q in goal])

    printf('Loaded {!r}'.format(system), print_type=PrintType.DEBUG_LOG)

    return system


def load_system(text):
    """Parses a system file.

    Args:
        text: The JSON text.

    Returns:
        A validated PwlSystem.

    Raises:
        ParseError: If the text is malformed.
        ValidationError: Naming the first violated invariant.
    """
    return system_from_dict(_load_json(text, 'system'))


def plan_from_dict(obj, states, actions):
    """Builds a PlanTable from the plan file structure.

    Args:
        obj: The plan structure.
        states: State names keys are resolved against.
        actions: Action names keys are resolved against.

    Raises:
        ParseError: If the structure is malformed.
        ValidationError: If names are unknown or a history repeats.
    """
    kind = 'plan'
    horizon = _require(obj, 'horizon', kind)
    entries = _require(obj, 'entries', kind, list)

    if isinstance(horizon, bool) or not isinstance(horizon, int):
        raise ParseError('plan horizon {!r} is not an integer'.format(horizon))

    state_of = _indexer(states, 'state')
    action_of = _indexer(actions, 'action')

    table = {}
    for entry in entries:
        names = _require(entry, 'history', 'plan entry', list)
        action = _require(entry, 'action', 'plan entry')
        if len(names) % 2 != 1:
            raise ParseError(
                'history {!r} does not alternate states and actions'
                .format(names)
            )

        history = tuple(
            state_of(n) if i % 2 == 0 else action_of(n)
            for i, n in enumerate(names)
        )
        if history in table:
            raise ValidationError('duplicate history {!r}'.format(names))
        table[history] = action_of(action)

    return PlanTable(table, horizon)


def load_plan(text, states, actions):
    """Parses a plan file against the given state and action names."""
    return plan_from_dict(_load_json(text, 'plan'), states, actions)


def extended_system_from_dict(obj):
    """Builds an ExtendedSystem from the extended system file structure."""
    kind = 'extended system'
    states = _require(obj, 'states', kind, list)
    actions = _require(obj, 'actions', kind, list)
    behavior_ids = _require(obj, 'behavior_ids', kind, list)
    candidates = _require(obj, 'initial_candidates', kind, list)
    transitions = _require(obj, 'gamma', kind, dict)
    goal = _require(obj, 'goal', kind, list)
    initial = _require(obj, 'initial', kind)

    state_of = _indexer(states, 'state')
    action_of = _indexer(actions, 'action')
    behavior_of = _indexer(behavior_ids, 'behavior')

    gamma = [[[None] * len(actions) for _ in behavior_ids] for _ in states]
    for key, target in transitions.items():
        q, b, a = _split_key(key, 3, 'transition')
        nq, nb = _split_key(target, 2, 'transition target')
        gamma[state_of(q)][behavior_of(b)][action_of(a)] = (state_of(nq),
                                                            behavior_of(nb))

    if any(pair is None for per_state in gamma for row in per_state
           for pair in row):
        raise ValidationError('global transition is not total')

    return ExtendedSystem(states, actions, state_of(initial),
                          [state_of(q) for q in goal], behavior_ids,
                          [behavior_of(b) for b in candidates], gamma)


def load_extended_system(text):
    return extended_system_from_dict(_load_json(text, 'extended system'))


def multiagent_system_from_dict(obj):
    """Builds a MultiAgentSystem from the multi-agent file structure.

    The structure holds ``agents`` (two objects with ``states``,
    ``initial`` and ``goals``), the shared ``actions``, ``behavior_ids``,
    ``initial_behaviors`` and the ``gamma_m`` table.
    """
    kind = 'multi-agent system'
    agents = _require(obj, 'agents', kind, list)
    actions = _require(obj, 'actions', kind, list)
    behavior_ids = _require(obj, 'behavior_ids', kind, list)
    initial_behaviors = _require(obj, 'initial_behaviors', kind, list)
    transitions = _require(obj, 'gamma_m', kind, dict)

    if len(agents) != 2:
        raise ParseError('multi-agent system needs exactly two agents')

    action_of = _indexer(actions, 'action')
    behavior_of = _indexer(behavior_ids, 'behavior')

    per_agent = []
    for agent, spec in enumerate(agents, 1):
        agent_kind = 'agent {}'.format(agent)
        states = _require(spec, 'states', agent_kind, list)
        state_of = _indexer(states, '{} state'.format(agent_kind))
        initials = [state_of(q)
                    for q in _require(spec, 'initial', agent_kind, list)]
        goals = [
            (_require(goal, 'name', agent_kind),
             [state_of(q) for q in _require(goal, 'states', agent_kind,
                                            list)])
            for goal in _require(spec, 'goals', agent_kind, list)
        ]
        per_agent.append((states, state_of, initials, goals))

    (states1, state1_of, initials1, goals1), \
        (states2, state2_of, initials2, goals2) = per_agent

    gamma = {}
    for key, target in transitions.items():
        q1, q2, b, a1, a2 = _split_key(key, 5, 'joint transition')
        n1, n2, nb = _split_key(target, 3, 'joint transition target')
        gamma[(state1_of(q1), state2_of(q2), behavior_of(b), action_of(a1),
               action_of(a2))] = (state1_of(n1), state2_of(n2),
                                  behavior_of(nb))

    return MultiAgentSystem(
        states1, states2, actions, initials1, initials2, behavior_ids,
        [behavior_of(b) for b in initial_behaviors], gamma, goals1, goals2
    )


def load_multiagent_system(text):
    return multiagent_system_from_dict(_load_json(text, 'multi-agent system'))


def load_multiagent_plan(text, ms):
    """Parses a multi-agent plan file.

    The file holds ``agents``: two objects with a ``plans`` list in the plan
    file format (histories over that agent's states) and an optional
    ``designation`` list of {"goal": name, "plan": index}.
    """
    kind = 'multi-agent plan'
    agents = _require(_load_json(text, kind), 'agents', kind, list)
    if len(agents) != 2:
        raise ParseError('multi-agent plan needs exactly two agents')

    plans, designations = [], []
    for agent, spec in enumerate(agents, 1):
        agent_kind = 'agent {} plans'.format(agent)
        plans.append([
            plan_from_dict(p, ms.agent_states(agent), ms.actions)
            for p in _require(spec, 'plans', agent_kind, list)
        ])

        designation = {}
        for d in spec.get('designation', []):
            index = cast_int(_require(d, 'plan', agent_kind))
            if index is None:
                raise ParseError('designated plan must be an index')
            designation[ms.goal_index(agent, _require(d, 'goal',
                                                      agent_kind))] = index
        designations.append(designation)

    return MultiAgentPlan(plans[0], plans[1], designations[0],
                          designations[1])


def parse_dimacs(text):
    """Parses a DIMACS CNF formula with three distinct variables per clause.

    Returns:
        A Cnf3.

    Raises:
        ParseError: If the text is not DIMACS CNF.
        ValidationError: If a clause does not have three distinct variables.
    """
    header = None
    clauses = []
    current = []

    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith('c'):
            continue
        if line.startswith('%'):
            break
        if line.startswith('p'):
            header = match_regex(line, 'dimacs_header')
            if header is None or clauses or current:
                raise ParseError('Malformed DIMACS header {!r}'.format(line))
            continue
        if header is None:
            raise ParseError('DIMACS clause before the header')

        for token in line.split():
            literal = cast_int(token)
            if literal is None:
                raise ParseError('Malformed DIMACS literal {!r}'.format(token))
            if literal == 0:
                clauses.append(current)
                current = []
            else:
                current.append(literal)

    if header is None:
        raise ParseError('Missing DIMACS header')
    if current:
        clauses.append(current)

    n, m = int(header[0]), int(header[1])
    if len(clauses) != m:
        raise ParseError(
            'DIMACS header declares {} clauses, found {}'.format(m,
                                                                len(clauses))
        )

    return make_cnf(n, clauses)


def parse_bench_file(input_file):
    """Parses a bench configuration file.

    Returns:
        A validated BenchConfiguration.

    Raises:
        ParseError: If the file is missing or malformed.
        InvalidSettingError: If a setting is invalid.
    """
    header = get_constant('bench_header')
    config_parser = ConfigParser()

    try:
        config_parser.read_string(read_file(input_file), input_file)
    except ConfigParserError as err:
        raise ParseError(
            'Invalid syntax in config file {}\n{}'.format(input_file, err)
        )

    extra = [s for s in config_parser.sections() if s != header]
    if extra:
        raise ParseError('Unknown section(s) {} in {}'.format(
            ', '.join(extra), input_file))

    config = BenchConfiguration(header)
    if config_parser.has_section(header):
        for key, value in config_parser[header].items():
            config.add_setting(key, value)

    if getattr(config, 'baseline', None) is None \
            and getattr(config, 'behaviors', None):
        config.baseline = config.behaviors[0]

    config.validate()

    printf('Configuration file {} parsed successfully'.format(input_file),
           print_type=PrintType.DEBUG_LOG)

    return config


def load_transport_spec(text):
    """Parses a transport description for `gen_transport`.

    The JSON object holds ``vertices``, ``edges`` as [label, source,
    destination] triples, ``uncertain`` as [label, [destinations]] pairs,
    ``start`` and ``target``.

    Returns:
        Dictionary of keyword arguments for `gen_transport`.
    """
    kind = 'transport'
    obj = _load_json(text, kind)
    edges = _require(obj, 'edges', kind, list)
    uncertain = obj.get('uncertain', [])

    if any(not isinstance(e, list) or len(e) != 3 for e in edges):
        raise ParseError('transport edges must be [label, source, '
                         'destination] triples')
    if not isinstance(uncertain, list) or any(
        not isinstance(u, list) or len(u) != 2 or not isinstance(u[1], list)
        for u in uncertain
    ):
        raise ParseError('uncertain routes must be [label, [destinations]] '
                         'pairs')

    return {
        'vertices': _require(obj, 'vertices', kind, list),
        'edges': [tuple(e) for e in edges],
        'uncertain': [(label, list(ends)) for label, ends in uncertain],
        'start': _require(obj, 'start', kind),
        'target': _require(obj, 'target', kind)
    }
