import itertools

from hypothesis import given, settings, strategies as st
import pytest

from pwl.domains import gen_random
from pwl.errors import ValidationError
from pwl.plan import Outcome, PlanTable, plan_from_action_sequence
from pwl.settings import SettingsManager
from pwl.verifier import check_threshold, simulate, verify

from tests.helpers import (
    C, D, DEAD, E1, E2, GA, GB, S0, SA, SB, X, random_plan
)


def test_satisfactory_intro_plan(intro, intro_plan):
    verdict = verify(intro, intro_plan)

    assert verdict.satisfactory
    assert verdict.satisfied_count == 2
    assert verdict.satisfied_fraction == 1.0
    assert verdict.failures == ()
    assert verdict.step_count == 6
    assert [t.behavior for t in verdict.traces] == [E1, E2]


def test_trace_records_every_step(intro, intro_plan):
    trace = simulate(intro, intro_plan, E1)

    assert trace.steps == ((S0, C), (SA, D), (S0, X))
    assert trace.final_state == GA
    assert trace.outcome is Outcome.GOAL_REACHED
    assert trace.goal_step == 3
    assert trace.undefined_history is None
    assert trace.succeeded

    assert simulate(intro, intro_plan, E2).final_state == GB


def test_undefined_entry(intro):
    trace = simulate(intro, PlanTable({(S0,): C}, 3), E1)

    assert trace.outcome is Outcome.UNDEFINED_ENTRY
    assert trace.undefined_history == (S0, C, SA)
    assert trace.steps == ((S0, C),)
    assert trace.final_state == SA
    assert trace.goal_step is None


def test_zero_horizon(intro, intro_plan):
    trace = simulate(intro, intro_plan, E1, horizon=0)

    assert trace.outcome is Outcome.HORIZON_EXHAUSTED
    assert trace.steps == ()
    assert trace.final_state == S0


def test_horizon_exhausted(intro, intro_plan):
    trace = simulate(intro, intro_plan, E2, horizon=2)

    assert trace.outcome is Outcome.HORIZON_EXHAUSTED
    assert trace.final_state == S0
    assert not verify(intro, intro_plan, horizon=2).satisfactory


def test_simulate_unknown_behavior(intro, intro_plan):
    with pytest.raises(IndexError):
        simulate(intro, intro_plan, 2)


def test_threshold(intro):
    plan = plan_from_action_sequence([C, D, X], intro, 3)

    strict = verify(intro, plan)
    assert not strict.satisfactory
    assert strict.satisfied_count == 1
    assert [t.behavior for t in strict.failures] == [E2]
    assert strict.failures[0].final_state == DEAD
    assert strict.failures[0].outcome is Outcome.HORIZON_EXHAUSTED

    assert verify(intro, plan, threshold=0.5).satisfactory


@pytest.mark.parametrize('threshold', [0, -0.5, 1.5, True, 'half'])
def test_bad_threshold(threshold):
    with pytest.raises(ValidationError):
        check_threshold(threshold)


def test_plan_with_unknown_action(intro):
    with pytest.raises(ValidationError):
        verify(intro, PlanTable({(S0,): 11}, 3))


def test_no_unconditional_plan_solves_intro(intro):
    for sequence in itertools.product(range(4), repeat=3):
        plan = plan_from_action_sequence(sequence, intro, 3)
        assert not verify(intro, plan).satisfactory, sequence


def test_workers_do_not_change_the_verdict():
    system = gen_random(7, 6, 3, 40, 0.2)
    plan = plan_from_action_sequence([0, 1, 2, 0, 1], system, 5)

    serial = verify(system, plan)
    SettingsManager.set('workers', 4)
    parallel = verify(system, plan)

    assert parallel == serial


def test_step_count_is_s_times_horizon():
    system = gen_random(3, 4, 2, 12, 0)
    plan = plan_from_action_sequence([0, 1] * 4, system, 8)

    verdict = verify(system, plan)

    assert verdict.satisfied_count == 0
    assert verdict.step_count == system.s * 8


def test_threshold_just_above_a_reachable_fraction(intro):
    plan = plan_from_action_sequence([C, D, X], intro, 3)

    verdict = verify(intro, plan, threshold=0.5000000001)

    assert verdict.satisfied_fraction == 0.5
    assert not verdict.satisfactory
    assert verify(intro, plan, threshold=0.5).satisfactory
    assert not verify(intro, plan, threshold=0.50001).satisfactory


def _random_case(seed, n_states, n_actions, n_behaviors, horizon):
    system = gen_random(seed, n_states, n_actions, n_behaviors, 0.3)
    return system, random_plan(system, seed, horizon)


@settings(max_examples=200, deadline=None)
@given(
    seed=st.integers(0, 2 ** 16),
    n_states=st.integers(1, 6),
    n_actions=st.integers(1, 3),
    n_behaviors=st.integers(1, 6),
    horizon=st.integers(0, 6),
    low=st.integers(1, 100),
    high=st.integers(1, 100)
)
def test_satisfactory_is_monotone_in_threshold(seed, n_states, n_actions,
                                               n_behaviors, horizon, low,
                                               high):
    system, plan = _random_case(seed, n_states, n_actions, n_behaviors,
                                horizon)
    low, high = sorted((low / 100, high / 100))

    strict = verify(system, plan, threshold=high)
    loose = verify(system, plan, threshold=low)

    assert strict.satisfied_count == loose.satisfied_count
    if strict.satisfactory:
        assert loose.satisfactory
    assert loose.satisfactory == (loose.satisfied_fraction >= low)


@settings(max_examples=200, deadline=None)
@given(
    seed=st.integers(0, 2 ** 16),
    n_states=st.integers(1, 6),
    n_actions=st.integers(1, 3),
    n_behaviors=st.integers(1, 6),
    horizon=st.integers(0, 8)
)
def test_traces_replay_against_behavior_tables(seed, n_states, n_actions,
                                               n_behaviors, horizon):
    system, plan = _random_case(seed, n_states, n_actions, n_behaviors,
                                horizon)

    for trace in verify(system, plan).traces:
        table = system.behaviors[trace.behavior].table
        q = system.initial
        h = (q,)
        for state, a in trace.steps:
            assert state == q
            assert state not in system.goal
            assert plan.get(h) == a
            q = table[q][a]
            h = h + (a, q)

        assert trace.final_state == q
        assert len(trace.steps) <= horizon
        if trace.outcome is Outcome.GOAL_REACHED:
            assert q in system.goal
            assert trace.goal_step == len(trace.steps)
        elif trace.outcome is Outcome.UNDEFINED_ENTRY:
            assert q not in system.goal
            assert plan.get(h) is None
            assert trace.undefined_history == h
        else:
            assert q not in system.goal
            assert len(trace.steps) == horizon
