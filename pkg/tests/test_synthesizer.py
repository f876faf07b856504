from hypothesis import given, settings, strategies as st
import pytest

from pwl.domains import gen_random
from pwl.errors import ValidationError
from pwl.model import BehaviorTable, PwlSystem, split_knowledge
from pwl.plan import longest_branch
from pwl.synthesizer import (
    BeliefNode,
    BeliefSearch,
    exists_plan,
    successors,
    synthesize
)
from pwl.verifier import verify

from tests.helpers import C, D, E1, E2, S0, SA, SB, gen_ring


def brute_force_exists(system, q, knowledge, budget):
    """Unmemoized AND-OR recursion straight from the definition."""
    if q in system.goal:
        return True
    if budget == 0:
        return False
    return any(
        all(brute_force_exists(system, nq, nk, budget - 1)
            for nq, nk in split_knowledge(system, q, knowledge, a))
        for a in range(len(system.actions))
    )


def test_intro_plan_at_horizon_three(intro, intro_plan):
    plan = synthesize(intro, 3)

    assert plan == intro_plan
    assert verify(intro, plan).satisfactory


def test_intro_has_no_plan_below_three(intro):
    assert not exists_plan(intro, 2)
    assert synthesize(intro, 2) is None


def test_default_horizon_is_s_times_t(intro):
    search = BeliefSearch(intro)
    assert search.horizon == intro.s * intro.t

    plan = search.plan()
    assert plan.horizon == 12
    assert verify(intro, plan).satisfactory
    # The first solving action at every node wanders between s0 and sA
    # while the budget allows it.
    assert longest_branch(intro, plan) == 11
    assert search.explored > 0


def test_goal_at_initial_state():
    system = PwlSystem(['home'], ['stay'], 0, [BehaviorTable('e', [[0]])],
                       [0])
    plan = synthesize(system, 0)

    assert plan is not None
    assert len(plan) == 0
    assert verify(system, plan).satisfactory


def test_empty_goal_has_no_plan():
    system = PwlSystem(['a', 'b'], ['go'], 0,
                       [BehaviorTable('e', [[1], [0]])], [])
    assert synthesize(system) is None


def test_negative_horizon(intro):
    with pytest.raises(ValidationError):
        BeliefSearch(intro, -1)


def test_successors_partition(intro):
    root = BeliefNode(S0, frozenset({E1, E2}))

    assert successors(intro, root, C) == (
        BeliefNode(SA, frozenset({E1})), BeliefNode(SB, frozenset({E2}))
    )
    assert len(successors(intro, root, D)) == 1


@settings(max_examples=500, deadline=None)
@given(
    seed=st.integers(0, 2 ** 16),
    n_states=st.integers(1, 4),
    n_actions=st.integers(1, 2),
    n_behaviors=st.integers(1, 3),
    horizon=st.integers(0, 4)
)
def test_agrees_with_brute_force(seed, n_states, n_actions, n_behaviors,
                                 horizon):
    system = gen_random(seed, n_states, n_actions, n_behaviors, 0.3)
    expected = brute_force_exists(system, system.initial,
                                  system.all_behaviors, horizon)

    assert exists_plan(system, horizon) == expected

    plan = synthesize(system, horizon)
    assert (plan is not None) == expected
    if plan is not None:
        assert verify(system, plan).satisfactory
        assert longest_branch(system, plan) <= horizon


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2 ** 16))
def test_default_horizon_is_complete(seed):
    system = gen_random(seed, 4, 2, 2, 0.25)
    bound = system.s * system.t
    # No plan needs more than s * t steps, so a larger budget finds nothing
    # new.
    assert exists_plan(system) == exists_plan(system, bound + 3)


def test_long_ring_is_solved_at_default_horizon():
    system = gen_ring(1200)
    assert exists_plan(system)

    plan = synthesize(system)
    assert plan.horizon == 1200
    assert len(plan) == 1199
    assert longest_branch(system, plan) == 1199
    assert verify(system, plan).satisfactory

    assert not exists_plan(system, 1198)
    assert synthesize(system, 1198) is None


@pytest.mark.parametrize('seed', range(3))
def test_goalless_system_exhausts_a_large_horizon(seed):
    system = gen_random(seed, 16, 1, 24, 0)
    search = BeliefSearch(system)

    assert search.horizon == 384
    assert not search.exists()
    assert search.plan() is None
