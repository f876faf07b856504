import pytest

from pwl.agent import PlanExecutor
from pwl.errors import ValidationError
from pwl.plan import PlanTable

from tests.helpers import C, D, E1, E2, GA, GB, S0, SA, SB, X, Y


def test_executor_learns_after_sensing(intro, intro_plan):
    executor = PlanExecutor(intro, intro_plan)
    assert executor.knowledge == {E1, E2}

    assert executor.next_action() == C
    executor.observe(SB)
    assert executor.knowledge == {E2}
    assert executor.learned == [1]

    assert executor.next_action() == D
    executor.observe(S0)
    assert executor.knowledge == {E2}

    assert executor.next_action() == Y
    executor.observe(GB)
    assert executor.done
    assert executor.steps == 3
    assert executor.next_action() is None
    assert executor.history == (S0, C, SB, D, S0, Y, GB)


def test_run_against_world(intro, intro_plan):
    executor = PlanExecutor(intro, intro_plan)

    assert executor.run(E1) == (S0, C, SA, D, S0, X, GA)
    assert executor.state == GA
    assert executor.learned == [1]


def test_unexplained_observation(intro, intro_plan):
    executor = PlanExecutor(intro, intro_plan)
    executor.next_action()
    with pytest.raises(ValidationError):
        executor.observe(GA)


def test_observe_without_pending_action(intro, intro_plan):
    executor = PlanExecutor(intro, intro_plan)
    with pytest.raises(ValidationError):
        executor.observe(SA)


def test_observe_unknown_state(intro, intro_plan):
    executor = PlanExecutor(intro, intro_plan)
    executor.next_action()
    with pytest.raises(ValidationError):
        executor.observe(42)


def test_stops_at_undefined_entry(intro):
    executor = PlanExecutor(intro, PlanTable({(S0,): C}, 3))

    assert executor.run(E2) == (S0, C, SB)
    assert not executor.done


def test_stops_at_horizon(intro, intro_plan):
    executor = PlanExecutor(intro, intro_plan.with_horizon(2))

    assert executor.run(E1) == (S0, C, SA, D, S0)
    assert executor.next_action() is None
