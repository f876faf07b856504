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

"""Reduction from 3-SAT to plan existence.

For a formula over v1..vn with clauses c1..ct the system has a black hole
state ``b``, a row of variable states q1..qn, a row of clause states
q(n+1)..q(n+t) and the goal q(n+t+1). The 2n behaviors ``E{i}_{bit}`` each
hide the value of one variable: at qi the action opposite to `bit` leads
straight to the goal, and at a clause row the action ``a{k}`` (the k-th
satisfying assignment of the clause, in lexicographic order over its
variables) only lets behaviors agreeing with that assignment pass.
"""

from collections import namedtuple
import itertools

import numpy as np

from pwl.errors import (
    NotSatisfactoryError,
    RestrictionUnsatisfiedError,
    SizeLimitError,
    ValidationError
)
from pwl.model import BehaviorTable, PwlSystem
from pwl.output import printf, PrintType
from pwl.plan import plan_from_action_sequence
from pwl.settings import get_constant, get_formatter
from pwl.verifier import verify


BLACK_HOLE = 'b'
ZERO, ONE = 0, 1
CLAUSE_ACTION_OFFSET = 2


Cnf3 = namedtuple('Cnf3', ('n', 'clauses'))
Cnf3.__doc__ = """A 3-CNF formula.

Args:
    n: Number of variables.
    clauses: Tuple of clauses; a clause is a tuple of three
        (variable, polarity) literals with distinct variables.
"""


def validate_cnf(cnf):
    """Checks the invariants of a 3-CNF formula.

    Raises:
        ValidationError: If the formula is malformed.
    """
    if isinstance(cnf.n, bool) or not isinstance(cnf.n, int) or cnf.n < 1:
        raise ValidationError('formula needs at least one variable')
    if not cnf.clauses:
        raise ValidationError('formula needs at least one clause')

    for j, clause in enumerate(cnf.clauses, 1):
        if len(clause) != 3:
            raise ValidationError(
                'clause {} has {} literals, expected 3'.format(j, len(clause))
            )
        variables = [v for v, _ in clause]
        if len(set(variables)) != 3:
            raise ValidationError(
                'clause {} repeats a variable: {}'.format(j, variables)
            )
        for v in variables:
            if isinstance(v, bool) or not isinstance(v, int) \
                    or not (1 <= v <= cnf.n):
                raise ValidationError(
                    'clause {} references unknown variable {!r}'.format(j, v)
                )


def make_cnf(n, clauses):
    """Builds a validated Cnf3 from DIMACS style integer clauses.

    Args:
        n: Number of variables.
        clauses: Iterable of integer triples, e.g. [1, 2, -3].

    Returns:
        A Cnf3.
    """
    cnf = Cnf3(n, tuple(
        tuple((abs(int(lit)), int(lit) > 0) for lit in clause)
        for clause in clauses
    ))
    validate_cnf(cnf)
    return cnf


def cnf_to_dimacs(cnf):
    return [[v if positive else -v for v, positive in clause]
            for clause in cnf.clauses]


def satisfies(cnf, assignment):
    """Returns whether an assignment (bits for v1..vn) satisfies a formula."""
    return all(
        any(assignment[v - 1] == int(positive) for v, positive in clause)
        for clause in cnf.clauses
    )


def satisfying_restrictions(clause):
    """Lists the 7 satisfying assignments of a clause.

    Args:
        clause: Tuple of (variable, polarity) literals.

    Returns:
        List of bit tuples over the clause variables sorted by index, in
        lexicographic order.
    """
    literals = sorted(clause)
    return [
        bits
        for bits in itertools.product((0, 1), repeat=len(literals))
        if any(bit == int(positive)
               for bit, (_, positive) in zip(bits, literals))
    ]


def system_from_cnf(cnf):
    """Constructs the plan-existence instance of a 3-CNF formula.

    Args:
        cnf: The Cnf3.

    Returns:
        A PwlSystem with n+t+2 states, 2n behaviors and 9 actions.

    Raises:
        ValidationError: If the formula is malformed.
    """
    validate_cnf(cnf)
    n, t = cnf.n, len(cnf.clauses)

    state_fmt = get_formatter('cnf_state')
    behavior_fmt = get_formatter('cnf_behavior')
    action_fmt = get_formatter('cnf_clause_action')

    states = [BLACK_HOLE] + [state_fmt.format(r) for r in range(1, n + t + 2)]
    actions = ['0', '1'] + [action_fmt.format(k) for k in range(1, 8)]
    b, goal = 0, n + t + 1

    restrictions = [satisfying_restrictions(c) for c in cnf.clauses]
    clause_variables = [sorted(v for v, _ in c) for c in cnf.clauses]

    behaviors = []
    for i in range(1, n + 1):
        for bit in (ZERO, ONE):
            table = [[b] * len(actions)]

            for r in range(1, n + 1):
                row = [r + 1, r + 1] + [b] * 7
                if r == i:
                    # The action opposite to the hidden bit exits to the goal.
                    row[1 - bit] = goal
                table.append(row)

            for j in range(t):
                row = [b, b]
                variables = clause_variables[j]
                for bits in restrictions[j]:
                    if i in variables and bits[variables.index(i)] != bit:
                        row.append(b)
                    else:
                        row.append(n + j + 2)
                table.append(row)

            table.append([goal] * len(actions))
            behaviors.append(BehaviorTable(behavior_fmt.format(i, bit), table))

    system = PwlSystem(states, actions, 1, behaviors, [goal])

    printf('Reduced formula with {} variables and {} clauses to {!r}'
           .format(n, t, system), print_type=PrintType.DEBUG_LOG)

    return system


def _check_assignment(cnf, assignment):
    assignment = tuple(assignment)
    if len(assignment) != cnf.n or any(x not in (0, 1) for x in assignment):
        raise ValidationError(
            'assignment {!r} must give 0 or 1 to each of {} variables'
            .format(assignment, cnf.n)
        )
    return tuple(int(x) for x in assignment)


def plan_from_assignment(cnf, assignment, system=None):
    """Builds the unconditional plan that plays an assignment.

    Step i plays the bit of v_i; step n+j plays the clause action matching
    the restriction of the assignment to the variables of c_j.

    Args:
        cnf: The Cnf3.
        assignment: Bits for v1..vn.
        system: The reduction system. Built from `cnf` if not given.

    Returns:
        A PlanTable with horizon n + t.

    Raises:
        RestrictionUnsatisfiedError: If the assignment falsifies a clause.
    """
    assignment = _check_assignment(cnf, assignment)
    if system is None:
        system = system_from_cnf(cnf)

    sequence = [ONE if x else ZERO for x in assignment]
    for j, clause in enumerate(cnf.clauses, 1):
        variables = sorted(v for v, _ in clause)
        restriction = tuple(assignment[v - 1] for v in variables)
        restrictions = satisfying_restrictions(clause)
        if restriction not in restrictions:
            raise RestrictionUnsatisfiedError(
                'assignment {} falsifies clause {}'.format(assignment, j)
            )
        sequence.append(CLAUSE_ACTION_OFFSET + restrictions.index(restriction))

    return plan_from_action_sequence(sequence, system,
                                     cnf.n + len(cnf.clauses))


def assignment_from_plan(cnf, plan, system=None):
    """Reads the assignment a satisfactory plan commits to.

    Args:
        cnf: The Cnf3.
        plan: A PlanTable satisfactory for the reduction system.
        system: The reduction system. Built from `cnf` if not given.

    Returns:
        A tuple of bits for v1..vn satisfying the formula.

    Raises:
        NotSatisfactoryError: If the plan is not satisfactory within n + t.
    """
    if system is None:
        system = system_from_cnf(cnf)

    horizon = cnf.n + len(cnf.clauses)
    if not verify(system, plan, horizon, 1).satisfactory:
        raise NotSatisfactoryError(
            'Plan is not satisfactory within horizon {}'.format(horizon)
        )

    assignment = []
    history = (1,)
    for i in range(1, cnf.n + 1):
        a = plan.get(history)
        if a not in (ZERO, ONE):
            raise NotSatisfactoryError(
                'Plan plays no variable action at q{}'.format(i)
            )
        assignment.append(a)
        history = history + (a, i + 1)

    return tuple(assignment)


def sat_oracle(cnf):
    """Finds the lexicographically first satisfying assignment.

    Args:
        cnf: The Cnf3.

    Returns:
        A tuple of bits for v1..vn, or None if the formula is unsatisfiable.

    Raises:
        SizeLimitError: If the formula has too many variables to enumerate.
    """
    limit = get_constant('sat_oracle_max_variables')
    if cnf.n > limit:
        raise SizeLimitError(
            '{} variables exceed oracle limit {}'.format(cnf.n, limit)
        )

    for assignment in itertools.product((0, 1), repeat=cnf.n):
        if satisfies(cnf, assignment):
            return assignment

    return None


def distinct_variable_clauses(n):
    """Lists every clause over three distinct variables of v1..vn.

    Returns:
        List of DIMACS integer triples.
    """
    return [
        [v if sign else -v for v, sign in zip(variables, signs)]
        for variables in itertools.combinations(range(1, n + 1), 3)
        for signs in itertools.product((True, False), repeat=3)
    ]


def random_cnf(seed, n, t):
    """Generates a random 3-CNF formula with distinct variables per clause.

    Args:
        seed: The random seed.
        n: Number of variables (at least 3).
        t: Number of clauses.

    Returns:
        A Cnf3.
    """
    if n < 3:
        raise ValidationError('random 3-CNF needs at least 3 variables')

    rng = np.random.default_rng(seed)
    clauses = []
    for _ in range(t):
        variables = rng.choice(n, size=3, replace=False) + 1
        signs = rng.integers(0, 2, size=3)
        clauses.append([int(v) if s else -int(v)
                        for v, s in zip(variables, signs)])

    return make_cnf(n, clauses)
