import itertools

import pytest

from pwl.errors import (
    NotSatisfactoryError,
    RestrictionUnsatisfiedError,
    SizeLimitError,
    ValidationError
)
from pwl.plan import PlanTable
from pwl.reductions import (
    CLAUSE_ACTION_OFFSET,
    ONE,
    ZERO,
    assignment_from_plan,
    cnf_to_dimacs,
    distinct_variable_clauses,
    make_cnf,
    plan_from_assignment,
    random_cnf,
    sat_oracle,
    satisfies,
    satisfying_restrictions,
    system_from_cnf
)
from pwl.synthesizer import exists_plan, synthesize
from pwl.verifier import verify


@pytest.fixture
def single_clause():
    """(v1 or v2 or not v3)"""
    return make_cnf(3, [[1, 2, -3]])


def _horizon(cnf):
    return cnf.n + len(cnf.clauses)


def test_system_sizes(single_clause):
    system = system_from_cnf(single_clause)

    assert system.t == 3 + 1 + 2
    assert system.s == 2 * 3
    assert len(system.actions) == 9
    assert system.states[0] == 'b'
    assert system.states[system.initial] == 'q1'
    assert system.goal == {5}
    assert system.behavior_names[:2] == ('E1_0', 'E1_1')
    # The sink b absorbs every action under every behavior.
    assert all(set(behavior.table[0]) == {0}
               for behavior in system.behaviors)


def test_restrictions_are_lexicographic(single_clause):
    restrictions = satisfying_restrictions(single_clause.clauses[0])

    assert len(restrictions) == 7
    assert (0, 0, 1) not in restrictions
    assert restrictions == sorted(restrictions)
    assert restrictions.index((1, 0, 0)) == 3


def test_restrictions_sort_variables():
    clause = make_cnf(3, [[-3, 1, 2]]).clauses[0]
    # Variables are ordered v1, v2, v3 whatever the literal order.
    assert (0, 0, 1) not in satisfying_restrictions(clause)


def test_plan_from_assignment(single_clause):
    plan = plan_from_assignment(single_clause, (1, 0, 0))

    assert plan.horizon == 4
    assert plan.get((1,)) == ONE
    assert plan.get((1, ONE, 2)) == ZERO
    assert plan.get((1, ONE, 2, ZERO, 3)) == ZERO
    assert plan.get((1, ONE, 2, ZERO, 3, ZERO, 4)) == CLAUSE_ACTION_OFFSET + 3

    system = system_from_cnf(single_clause)
    assert verify(system, plan).satisfactory


def test_falsifying_assignment(single_clause):
    with pytest.raises(RestrictionUnsatisfiedError):
        plan_from_assignment(single_clause, (0, 0, 1))


@pytest.mark.parametrize('assignment', [(1, 0), (1, 0, 2), (1, 0, 0, 1)])
def test_malformed_assignment(single_clause, assignment):
    with pytest.raises(ValidationError):
        plan_from_assignment(single_clause, assignment)


def test_assignment_from_plan(single_clause):
    plan = synthesize(system_from_cnf(single_clause), 4)
    assignment = assignment_from_plan(single_clause, plan)

    assert satisfies(single_clause, assignment)


def test_assignment_from_unsatisfactory_plan(single_clause):
    plan = PlanTable({(1,): ZERO}, 4)
    with pytest.raises(NotSatisfactoryError):
        assignment_from_plan(single_clause, plan)


@pytest.mark.parametrize('clauses', [
    [[1, 1, 2]],
    [[1, 2]],
    [[1, 2, 5]],
    [[1, -1, 2]],
    []
])
def test_make_cnf_rejects(clauses):
    with pytest.raises(ValidationError):
        make_cnf(3, clauses)


def test_dimacs_conversion(single_clause):
    assert cnf_to_dimacs(single_clause) == [[1, 2, -3]]


def test_sat_oracle_order(single_clause):
    assert sat_oracle(single_clause) == (0, 0, 0)
    assert sat_oracle(make_cnf(3, distinct_variable_clauses(3))) is None


def test_sat_oracle_limit():
    with pytest.raises(SizeLimitError):
        sat_oracle(make_cnf(26, [[1, 2, 3]]))


def test_distinct_variable_clauses():
    assert len(distinct_variable_clauses(3)) == 8
    assert len(distinct_variable_clauses(4)) == 4 * 8


def test_random_cnf_is_deterministic():
    assert random_cnf(11, 5, 7) == random_cnf(11, 5, 7)
    assert len(random_cnf(11, 5, 7).clauses) == 7
    with pytest.raises(ValidationError):
        random_cnf(0, 2, 1)


def _check_reduction(cnf):
    system = system_from_cnf(cnf)
    horizon = _horizon(cnf)
    witness = sat_oracle(cnf)

    assert exists_plan(system, horizon) == (witness is not None)

    if witness is not None:
        assert verify(system, plan_from_assignment(cnf, witness)).satisfactory
        found = assignment_from_plan(cnf, synthesize(system, horizon))
        assert satisfies(cnf, found)


def test_every_small_formula_over_three_variables():
    clauses = distinct_variable_clauses(3)
    for t in range(1, 5):
        for subset in itertools.combinations(clauses, t):
            _check_reduction(make_cnf(3, subset))


def test_unsatisfiable_formula():
    cnf = make_cnf(3, distinct_variable_clauses(3))
    _check_reduction(cnf)
    assert synthesize(system_from_cnf(cnf), _horizon(cnf)) is None


@pytest.mark.parametrize('seed', range(200))
def test_random_formulas(seed):
    _check_reduction(random_cnf(seed, 4, 1 + seed % 4))


def test_dense_random_formulas():
    for seed in range(10):
        _check_reduction(random_cnf(seed, 3, 6))
