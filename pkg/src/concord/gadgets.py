"""Ready-made scenarios: worked examples and hardness gadgets.

Three fixtures exercise the distinctive shapes of the problem space (a
tie-then-decide rescue scenario, a profile with two incompatible middle
grounds, a profile with none), and one encodes subset-sum reachability as a
three-statement consistency question.
"""

from __future__ import annotations

from typing import Sequence

from .domain import Alternative, Combiner, Profile, Stakeholder, Statement, VariableSpace
from .errors import DomainMismatchError


def moral_machine_fixture() -> tuple[Profile, dict[str, Alternative]]:
    """Rescue-choice scenario over counts of adults, children and dogs.

    Two stakeholders hold exactly opposite strict preferences between the
    same two groups, so the union can never be satisfied and every reasoning
    question becomes interesting.
    """
    space = VariableSpace(
        ("adult", "child", "dog"),
        tuple((0, 1, 2, 3, 4, 5) for _ in range(3)),
    )
    alpha = Alternative((1, 4, 0))
    beta = Alternative((2, 3, 3))
    gamma = Alternative((1, 3, 5))
    profile = Profile(
        space=space,
        combiner=Combiner("sum"),
        model_class="hier",
        stakeholders=(
            Stakeholder("p1", (Statement(alpha, beta, strict=True),)),
            Stakeholder("p2", (Statement(beta, alpha, strict=True),)),
        ),
    )
    return profile, {"alpha": alpha, "beta": beta, "gamma": gamma}


def nonuniqueness_fixture() -> tuple[Profile, dict[str, Alternative]]:
    """Four binary variables, opposed stakeholders, two incompatible grounds.

    The combiner maps every genuine combination of values to one shared
    sentinel, so only single-variable levels can separate alternatives. The
    grounds split on the two cross alternatives: one contains "gamma beats
    delta", the other the reverse, and no ground contains both.
    """
    space = VariableSpace.binary(("x", "y", "z", "w"))
    alpha = Alternative((1, 0, 0, 0))
    beta = Alternative((0, 1, 0, 0))
    alpha2 = Alternative((0, 0, 1, 0))
    beta2 = Alternative((0, 0, 0, 1))
    gamma = Alternative((1, 0, 1, 0))
    delta = Alternative((0, 1, 0, 1))
    profile = Profile(
        space=space,
        combiner=Combiner.tie_over((0, 1)),
        model_class="hier",
        stakeholders=(
            Stakeholder(
                "p1",
                (
                    Statement(alpha, beta, strict=True),
                    Statement(alpha2, beta2, strict=True),
                ),
            ),
            Stakeholder(
                "p2",
                (
                    Statement(beta, alpha, strict=True),
                    Statement(beta2, alpha2, strict=True),
                ),
            ),
        ),
    )
    return profile, {
        "alpha": alpha,
        "beta": beta,
        "alpha2": alpha2,
        "beta2": beta2,
        "gamma": gamma,
        "delta": delta,
    }


def nonexistence_fixture() -> tuple[Profile, dict[str, Alternative]]:
    """Two binary variables with a boolean-and combiner; no middle ground.

    Each stakeholder prefers their own single-variable alternative to the
    all-ones alternative. Together that forces both variables to lose against
    something every model ranks at the top, and the candidate filters empty
    out.
    """
    space = VariableSpace.binary(("x", "y"))
    alpha = Alternative((1, 0))
    beta = Alternative((0, 1))
    gamma = Alternative((1, 1))
    delta = Alternative((0, 0))
    profile = Profile(
        space=space,
        combiner=Combiner("and"),
        model_class="hier",
        stakeholders=(
            Stakeholder("p1", (Statement(alpha, gamma, strict=False),)),
            Stakeholder("p2", (Statement(beta, gamma, strict=False),)),
        ),
    )
    return profile, {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta}


def subset_sum_gadget(values: Sequence[int], target: int) -> Profile:
    """Encode a subset-sum instance as three statements over |values|+1 variables.

    One variable per multiset element plus a target variable. The strict
    statement forces any satisfying model to rank the target variable
    somewhere; the two opposed weak statements force the first level doing so
    to sum its element variables exactly to the target. Consistency of the
    resulting profile is therefore exactly subset-sum reachability.
    """
    if not values:
        raise DomainMismatchError("subset-sum gadget needs at least one value")
    if any(int(v) != v or v < 1 for v in values):
        raise DomainMismatchError("subset-sum values must be positive integers")
    if int(target) != target or target < 1:
        raise DomainMismatchError("subset-sum target must be a positive integer")

    names: list[str] = []
    used: set[str] = set()
    for a in values:
        base = f"v{a}"
        name = base
        k = 1
        while name in used:
            k += 1
            name = f"{base}_{k}"
        used.add(name)
        names.append(name)
    names.append("vT")

    domains = tuple((0, a) for a in values) + (tuple(sorted({0, 1, target})),)
    space = VariableSpace(tuple(names), domains)

    n = len(values)
    alpha_t = Alternative((0,) * n + (1,))
    beta_t = Alternative((0,) * (n + 1))
    alpha_s = Alternative(tuple(values) + (0,))
    beta_s = Alternative((0,) * n + (target,))
    statements = (
        Statement(alpha_t, beta_t, strict=True),
        Statement(alpha_s, beta_s, strict=False),
        Statement(beta_s, alpha_s, strict=False),
    )
    return Profile(
        space=space,
        combiner=Combiner("sum"),
        model_class="hier",
        stakeholders=(Stakeholder("reduction", statements),),
    )
