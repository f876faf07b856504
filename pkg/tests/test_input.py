import json

import pytest

from pwl.domains import gen_alarm_example, gen_narrow_bridge
from pwl.errors import InvalidSettingError, ParseError, ValidationError
from pwl.input import (
    load_extended_system,
    load_multiagent_plan,
    load_multiagent_system,
    load_plan,
    load_system,
    load_transport_spec,
    parse_bench_file,
    parse_dimacs,
    read_file
)
from pwl.output import (
    dumps,
    extended_system_to_dict,
    multiagent_system_to_dict,
    plan_to_dict,
    system_to_dict
)
from pwl.reductions import make_cnf


TINY = {
    'states': ['s', 'g'],
    'actions': ['go'],
    'initial': 's',
    'goal': ['g'],
    'behaviors': [{'name': 'e', 'table': {'s|go': 'g', 'g|go': 'g'}}]
}


def _text(obj):
    return json.dumps(obj)


def test_load_system(intro):
    assert load_system(dumps(system_to_dict(intro))) == intro


def test_load_tiny_system():
    system = load_system(_text(TINY))

    assert system.step(0, 0, 0) == 1
    assert system.goal == {1}


def test_non_total_behavior():
    obj = json.loads(_text(TINY))
    del obj['behaviors'][0]['table']['g|go']
    with pytest.raises(ValidationError, match="non-total behavior 'e'"):
        load_system(_text(obj))


@pytest.mark.parametrize('mutate, error', [
    (lambda o: o.pop('states'), ParseError),
    (lambda o: o.update(actions='go'), ParseError),
    (lambda o: o.update(initial='nowhere'), ValidationError),
    (lambda o: o['behaviors'][0]['table'].update({'s|jump': 'g'}),
     ValidationError),
    (lambda o: o['behaviors'][0]['table'].update({'s-go': 'g'}), ParseError)
])
def test_malformed_system(mutate, error):
    obj = json.loads(_text(TINY))
    mutate(obj)
    with pytest.raises(error):
        load_system(_text(obj))


@pytest.mark.parametrize('text', ['{', '[]', ''])
def test_malformed_json(text):
    with pytest.raises(ParseError):
        load_system(text)


def test_load_plan(intro, intro_plan):
    text = dumps(plan_to_dict(intro_plan, intro.states, intro.actions))
    assert load_plan(text, intro.states, intro.actions) == intro_plan


def test_plan_file_format(intro, intro_plan):
    obj = plan_to_dict(intro_plan, intro.states, intro.actions)

    assert obj['horizon'] == 3
    assert obj['entries'][0] == {'history': ['s0'], 'action': 'c'}


@pytest.mark.parametrize('plan, error', [
    ({'horizon': 'three', 'entries': []}, ParseError),
    ({'horizon': 2}, ParseError),
    ({'horizon': 2, 'entries': [{'history': ['s0', 'c'], 'action': 'd'}]},
     ParseError),
    ({'horizon': 2, 'entries': [{'history': ['s0'], 'action': 'c'},
                                {'history': ['s0'], 'action': 'd'}]},
     ValidationError),
    ({'horizon': 2, 'entries': [{'history': ['s9'], 'action': 'c'}]},
     ValidationError),
    ({'horizon': -1, 'entries': []}, ValidationError)
])
def test_malformed_plan(intro, plan, error):
    with pytest.raises(error):
        load_plan(_text(plan), intro.states, intro.actions)


def test_load_extended_system():
    es = gen_alarm_example()
    obj = extended_system_to_dict(es)

    assert obj['gamma']['s|calm_L|alarm'] == 's|alarmed'
    assert load_extended_system(dumps(obj)) == es


def test_extended_system_must_be_total():
    obj = extended_system_to_dict(gen_alarm_example())
    del obj['gamma']['s|calm_L|alarm']
    with pytest.raises(ValidationError):
        load_extended_system(dumps(obj))


def test_load_multiagent_system():
    ms = gen_narrow_bridge()
    loaded = load_multiagent_system(dumps(multiagent_system_to_dict(ms)))

    assert loaded.gamma == ms.gamma
    assert loaded.states == ms.states
    assert loaded.goals == ms.goals
    assert loaded.initial_behaviors == ms.initial_behaviors


def test_multiagent_system_needs_two_agents():
    obj = multiagent_system_to_dict(gen_narrow_bridge())
    obj['agents'] = obj['agents'][:1]
    with pytest.raises(ParseError):
        load_multiagent_system(dumps(obj))


def test_load_multiagent_plan():
    ms = gen_narrow_bridge()
    text = _text({'agents': [
        {'plans': [{'horizon': 1,
                    'entries': [{'history': ['L'], 'action': 'cross'}]}]},
        {'plans': [{'horizon': 1, 'entries': []},
                   {'horizon': 1,
                    'entries': [{'history': ['L'], 'action': 'wait'}]}],
         'designation': [{'goal': 'far', 'plan': 1}]}
    ]})

    mp = load_multiagent_plan(text, ms)

    assert mp.agent_plans(1)[0].get((0,)) == 0
    assert len(mp.agent_plans(2)) == 2
    assert mp.agent_designation(2) == {0: 1}


def test_multiagent_plan_unknown_goal():
    ms = gen_narrow_bridge()
    text = _text({'agents': [
        {'plans': [], 'designation': [{'goal': 'moon', 'plan': 0}]},
        {'plans': []}
    ]})
    with pytest.raises(ValidationError):
        load_multiagent_plan(text, ms)


def test_parse_dimacs():
    text = 'c a comment\np cnf 3 2\n1 2 -3 0\n-1 2\n3 0\n'

    assert parse_dimacs(text) == make_cnf(3, [[1, 2, -3], [-1, 2, 3]])


@pytest.mark.parametrize('text, error', [
    ('1 2 3 0\n', ParseError),
    ('p cnf 3 2\n1 2 3 0\n', ParseError),
    ('p cnf x 1\n1 2 3 0\n', ParseError),
    ('p cnf 3 1\n1 two 3 0\n', ParseError),
    ('p cnf 3 1\n1 2 0\n', ValidationError),
    ('c only a comment\n', ParseError)
])
def test_malformed_dimacs(text, error):
    with pytest.raises(error):
        parse_dimacs(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(ParseError):
        read_file(str(tmp_path / 'missing.json'))


def test_bench_file(tmp_path):
    path = tmp_path / 'bench.ini'
    path.write_text('[bench]\nbehaviors = 4, 8\nhorizon = 5\n')

    config = parse_bench_file(str(path))

    assert config.behaviors == [4, 8]
    assert config.baseline == 4
    assert config.horizon == 5
    assert config.states == 8


@pytest.mark.parametrize('text, error', [
    ('[bench]\nbehaviors = 4, 8\nbaseline = 16\n', InvalidSettingError),
    ('[bench]\ncolor = blue\n', InvalidSettingError),
    ('[bench]\nhorizon = soon\n', InvalidSettingError),
    ('[other]\nhorizon = 1\n', ParseError),
    ('horizon = 1\n', ParseError)
])
def test_malformed_bench_file(tmp_path, text, error):
    path = tmp_path / 'bench.ini'
    path.write_text(text)
    with pytest.raises(error):
        parse_bench_file(str(path))


def test_transport_spec():
    spec = load_transport_spec(_text({
        'vertices': ['A', 'T'],
        'edges': [['go', 'A', 'T']],
        'start': 'A',
        'target': 'T'
    }))

    assert spec['edges'] == [('go', 'A', 'T')]
    assert spec['uncertain'] == []

    with pytest.raises(ParseError):
        load_transport_spec(_text({'vertices': [], 'edges': [['go', 'A']],
                                   'start': 'A', 'target': 'T'}))
