import json

import pytest

from pwl.__main__ import main
from pwl.commands.bench import bench_report
from pwl.commands.common import EXIT_ERROR, EXIT_NEGATIVE, EXIT_SUCCESS
from pwl.commands.plan_from_assignment import parse_assignment
from pwl.config.bench import BenchConfiguration
from pwl.errors import ParseError
from pwl.output import dumps, plan_to_dict, system_to_dict
from pwl.plan import plan_from_action_sequence

from tests.helpers import C, D, X, gen_ring


def run(capsys, *argv):
    """Runs the CLI and returns (exit code, parsed STDOUT or None)."""
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def files(tmp_path, intro, intro_plan):
    """Writes the intro system and plans to disk."""
    paths = {
        'system': tmp_path / 'intro.json',
        'plan': tmp_path / 'plan.json',
        'blind': tmp_path / 'blind.json',
        'cnf': tmp_path / 'formula.cnf'
    }
    main(['gen', 'intro', '-s', '-o', str(paths['system'])])
    paths['plan'].write_text(
        dumps(plan_to_dict(intro_plan, intro.states, intro.actions))
    )
    blind = plan_from_action_sequence([C, D, X], intro, 3)
    paths['blind'].write_text(
        dumps(plan_to_dict(blind, intro.states, intro.actions))
    )
    paths['cnf'].write_text('c (v1 | v2 | ~v3)\np cnf 3 1\n1 2 -3 0\n')
    return {k: str(v) for k, v in paths.items()}


def test_gen_intro(capsys):
    code, out = run(capsys, 'gen', 'intro')

    assert code == EXIT_SUCCESS
    assert out['states'] == ['s0', 'sA', 'sB', 'gA', 'gB', 'dead']
    assert out['initial'] == 's0'


def test_verify_satisfactory(capsys, files):
    code, out = run(capsys, 'verify', '--system', files['system'],
                    '--plan', files['plan'])

    assert code == EXIT_SUCCESS
    assert out['satisfactory']
    assert out['failures'] == []
    assert out['traces'][0]['final_state'] == 'gA'


def test_verify_reports_failures(capsys, files):
    code, out = run(capsys, 'verify', '--system', files['system'],
                    '--plan', files['blind'])

    assert code == EXIT_NEGATIVE
    assert [f['behavior'] for f in out['failures']] == ['E2']
    assert out['failures'][0]['outcome'] == 'horizon_exhausted'


def test_verify_threshold(capsys, files):
    code, _ = run(capsys, 'verify', '--system', files['system'],
                  '--plan', files['blind'], '--threshold', '0.5', '-w', '2')
    assert code == EXIT_SUCCESS


def test_output_is_stable(capsys, files):
    argv = ['verify', '--system', files['system'], '--plan', files['plan']]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out

    assert first == second
    assert first.endswith('\n')


@pytest.mark.parametrize('argv', [
    ['verify', '--system', 'missing.json', '--plan', 'missing.json'],
    ['verify', '--system', 'intro.json'],
    ['verify', '--threshold', '2'],
    ['teleport'],
    []
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_ERROR


def test_validate(capsys, files):
    code, out = run(capsys, 'validate', '--system', files['system'],
                    '--plan', files['plan'])

    assert code == EXIT_SUCCESS
    assert out['completeness_bound'] == 12
    assert out['plan'] == {
        'horizon': 3,
        'entries': 5,
        'canonical_entries': 5,
        'entry_bound': 6,
        'longest_branch': 3
    }


def test_validate_rejects_bad_system(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({
        'states': ['s'], 'actions': ['a'], 'initial': 's', 'goal': [],
        'behaviors': [{'name': 'e', 'table': {}}]
    }))
    assert main(['validate', '--system', str(path)]) == EXIT_ERROR


def test_simulate(capsys, files):
    code, out = run(capsys, 'simulate', '--system', files['system'],
                    '--plan', files['plan'], '--behavior', 'E2')

    assert code == EXIT_SUCCESS
    assert len(out['traces']) == 1
    assert [s['action'] for s in out['traces'][0]['steps']] == ['c', 'd', 'y']

    code, out = run(capsys, 'simulate', '--system', files['system'],
                    '--plan', files['plan'], '--tree')
    assert code == EXIT_SUCCESS
    assert out['tree']['knowledge'] == ['E1', 'E2']
    assert [c['observed'] for c in out['tree']['children']] == ['sA', 'sB']


def test_synthesize(capsys, files, intro, intro_plan):
    code, out = run(capsys, 'synthesize', '--system', files['system'],
                    '--horizon', '3')

    assert code == EXIT_SUCCESS
    assert out == plan_to_dict(intro_plan, intro.states, intro.actions)

    code, out = run(capsys, 'synthesize', '--system', files['system'],
                    '--horizon', '2')
    assert code == EXIT_NEGATIVE
    assert out is None


def test_synthesize_long_ring(capsys, tmp_path):
    ring = gen_ring(400)
    path = tmp_path / 'ring.json'
    path.write_text(dumps(system_to_dict(ring)))

    code, out = run(capsys, 'synthesize', '--system', str(path))

    assert code == EXIT_SUCCESS
    assert out['horizon'] == 400
    assert len(out['entries']) == 399
    assert out['entries'][-1]['action'] == 'next'


def test_shrink(capsys, files):
    code, out = run(capsys, 'shrink', '--system', files['system'],
                    '--plan', files['plan'])
    assert code == EXIT_SUCCESS
    assert len(out['entries']) == 5

    assert main(['shrink', '--system', files['system'],
                 '--plan', files['blind']]) == EXIT_ERROR


def test_reduction_commands(capsys, files, tmp_path):
    code, out = run(capsys, 'from-cnf', '--cnf', files['cnf'])
    assert code == EXIT_SUCCESS
    assert len(out['states']) == 6
    assert len(out['behaviors']) == 6

    plan_path = str(tmp_path / 'witness.json')
    code, _ = run(capsys, 'plan-from-assignment', '--cnf', files['cnf'],
                  '--assignment', '100', '-o', plan_path)
    assert code == EXIT_SUCCESS

    code, out = run(capsys, 'assignment-from-plan', '--cnf', files['cnf'],
                    '--plan', plan_path)
    assert code == EXIT_SUCCESS
    assert out == {'assignment': [1, 0, 0]}

    code, out = run(capsys, 'plan-from-assignment', '--cnf', files['cnf'],
                    '--assignment', '0,0,1')
    assert code == EXIT_NEGATIVE
    assert out is None


def test_assignment_from_unsatisfactory_plan(capsys, files, tmp_path):
    plan_path = tmp_path / 'stub.json'
    plan_path.write_text(json.dumps({
        'horizon': 4, 'entries': [{'history': ['q1'], 'action': '0'}]
    }))
    assert main(['assignment-from-plan', '--cnf', files['cnf'],
                 '--plan', str(plan_path)]) == EXIT_NEGATIVE


@pytest.mark.parametrize('value, expected', [
    ('100', (1, 0, 0)), ('1,0,1', (1, 0, 1)), (' 01 ', (0, 1))
])
def test_parse_assignment(value, expected):
    assert parse_assignment(value) == expected


@pytest.mark.parametrize('value', ['', '102', 'yes', '1,,0'])
def test_parse_assignment_rejects(value):
    with pytest.raises(ParseError):
        parse_assignment(value)


def test_extended_commands(capsys, tmp_path):
    system_path = str(tmp_path / 'alarm.json')
    plan_path = str(tmp_path / 'alarm_plan.json')
    main(['gen', 'alarm', '-s', '-o', system_path])

    code, out = run(capsys, 'ext-synthesize', '--system', system_path,
                    '--horizon', '3', '-o', plan_path)
    assert code == EXIT_SUCCESS

    code, out = run(capsys, 'ext-verify', '--system', system_path,
                    '--plan', plan_path)
    assert code == EXIT_SUCCESS
    assert out['traces'][0]['hidden'] == ['calm_L'] * 4

    code, _ = run(capsys, 'ext-synthesize', '--system', system_path,
                  '--horizon', '2')
    assert code == EXIT_NEGATIVE

    assert main(['ext-synthesize', '--system', system_path]) == EXIT_ERROR


def test_multiagent_commands(capsys, tmp_path):
    system_path = str(tmp_path / 'bridge.json')
    plan_path = tmp_path / 'bridge_plan.json'
    main(['gen', 'bridge', '-s', '-o', system_path])

    cross = {'horizon': 2, 'entries': [
        {'history': ['L'], 'action': 'cross'},
        {'history': ['L', 'cross', 'L'], 'action': 'cross'},
        {'history': ['L', 'cross', 'R'], 'action': 'wait'}
    ]}
    wait_then_cross = {'horizon': 2, 'entries': [
        {'history': ['L'], 'action': 'wait'},
        {'history': ['L', 'wait', 'L'], 'action': 'cross'}
    ]}
    plan_path.write_text(json.dumps({'agents': [
        {'plans': [cross]}, {'plans': [wait_then_cross, cross]}
    ]}))

    code, out = run(capsys, 'ma-verify', '--system', system_path,
                    '--plan', str(plan_path))
    assert code == EXIT_SUCCESS
    assert out['satisfactory']
    assert [r['plan'] for r in out['results']] == [0, 0]

    code, out = run(capsys, 'ma-verify', '--system', system_path,
                    '--plan', str(plan_path), '--horizon', '1')
    assert code == EXIT_NEGATIVE
    assert out['results'][0]['counterexamples'] == [{
        'plan': 0, 'opponent_plan': 1, 'own_initial': 'L',
        'opponent_initial': 'L', 'behavior': 'busy'
    }]

    code, out = run(capsys, 'reduce-goals', '--system', system_path)
    assert code == EXIT_SUCCESS
    assert len(out['agents'][0]['states']) == 7
    assert out['actions'] == ['cross', 'wait', 'observe_goal']


def test_bench_command(capsys, tmp_path):
    config_path = tmp_path / 'bench.ini'
    config_path.write_text(
        '[bench]\nbehaviors = 2, 4\nstates = 3\nactions = 2\nhorizon = 5\n'
        'repetitions = 1\n'
    )

    code, out = run(capsys, 'bench', '-c', str(config_path))

    assert code == EXIT_SUCCESS
    assert [r['behaviors'] for r in out['results']] == [2, 4]
    assert all(r['step_count'] == r['step_bound'] for r in out['results'])
    assert out['config']['baseline'] == 2


def test_bench_report_with_fixed_clock():
    config = BenchConfiguration()
    config.add_setting('behaviors', '1, 2, 4')
    config.add_setting('baseline', '1')
    config.add_setting('states', '2')
    config.add_setting('horizon', '3')
    config.add_setting('repetitions', '2')
    config.validate()

    ticks = iter(range(100))
    report = bench_report(config, clock=lambda: next(ticks))

    assert [r['step_count'] for r in report['results']] == [3, 6, 12]
    assert [r['entries'] for r in report['results']] == [
        r['entries'] for r in bench_report(config)['results']
    ]
    assert report['timing']['relative'][0] == {'behaviors': 1, 'ratio': 1.0}
    assert [g['ratio'] for g in report['timing']['growth']] == [1.0, 1.0]


def test_version(capsys):
    assert main(['--version']) == EXIT_SUCCESS
