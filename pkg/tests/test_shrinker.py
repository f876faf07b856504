from hypothesis import assume, given, HealthCheck, settings, strategies as st
import pytest

from pwl.domains import IDLE_ACTION, gen_random
from pwl.errors import NotSatisfactoryError
from pwl.plan import PlanTable, longest_branch, plan_from_action_sequence
from pwl.shrinker import shrink
from pwl.synthesizer import synthesize
from pwl.verifier import verify

from tests.helpers import C, D, X, gen_ring


def pad_with_idling(system, plan, k):
    """Prefixes a plan with k idle steps at the initial state."""
    idle = system.actions.index(IDLE_ACTION)
    q0 = system.initial
    prefix = (q0,) + (idle, q0) * k

    entries = {(q0,) + (idle, q0) * j: idle for j in range(k)}
    for h, a in plan.entries.items():
        entries[prefix + h[1:]] = a
    return PlanTable(entries, plan.horizon + k)


def test_shrink_keeps_a_short_plan(intro, intro_plan):
    shrunk = shrink(intro, intro_plan)

    assert shrunk.entries == intro_plan.entries
    assert shrunk.horizon == 3


def test_shrink_removes_wandering(intro, intro_plan):
    long_plan = synthesize(intro)
    assert longest_branch(intro, long_plan) == 11

    shrunk = shrink(intro, long_plan)

    assert shrunk.entries == intro_plan.entries
    assert shrunk.horizon == intro.s * intro.t
    assert verify(intro, shrunk).satisfactory


def test_shrink_rejects_unsatisfactory_plan(intro):
    plan = plan_from_action_sequence([C, D, X], intro, 3)
    with pytest.raises(NotSatisfactoryError):
        shrink(intro, plan)


@settings(max_examples=100, deadline=None,
          suppress_health_check=[HealthCheck.filter_too_much])
@given(
    seed=st.integers(0, 2 ** 16),
    n_states=st.integers(2, 8),
    n_behaviors=st.integers(1, 4),
    padding=st.integers(1, 12)
)
def test_shrunk_branches_within_s_times_t(seed, n_states, n_behaviors,
                                          padding):
    system = gen_random(seed, n_states, 2, n_behaviors, 0.4, idle=True)
    plan = synthesize(system)
    assume(plan is not None and system.initial not in system.goal)

    padded = pad_with_idling(system, plan, padding)
    assert verify(system, padded).satisfactory

    shrunk = shrink(system, padded)
    bound = system.s * system.t

    assert verify(system, shrunk).satisfactory
    assert longest_branch(system, shrunk) <= bound
    assert shrunk.horizon == min(padded.horizon, bound)


def test_shrink_keeps_a_long_plan():
    system = gen_ring(1200)
    plan = synthesize(system)
    assert longest_branch(system, plan) == 1199

    assert shrink(system, plan) == plan


def test_shrink_splices_every_idle_step_of_a_long_plan():
    system = gen_ring(600, idle=True)
    move, stay = range(2)
    sequence = [move, stay] * 599
    padded = plan_from_action_sequence(sequence, system, len(sequence))
    assert longest_branch(system, padded) == 2 * 599 - 1

    shrunk = shrink(system, padded)

    assert shrunk.entries == synthesize(system).entries
    assert shrunk.horizon == 600
    assert longest_branch(system, shrunk) == 599


@settings(max_examples=100, deadline=None,
          suppress_health_check=[HealthCheck.filter_too_much])
@given(
    seed=st.integers(0, 2 ** 16),
    n_states=st.integers(2, 6),
    n_behaviors=st.integers(1, 3),
    padding=st.integers(0, 6)
)
def test_shrink_is_idempotent(seed, n_states, n_behaviors, padding):
    system = gen_random(seed, n_states, 2, n_behaviors, 0.4, idle=True)
    plan = synthesize(system)
    assume(plan is not None and system.initial not in system.goal)

    once = shrink(system, pad_with_idling(system, plan, padding))

    assert shrink(system, once) == once
