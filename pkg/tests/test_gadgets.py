"""Built-in fixtures and the subset-sum reduction."""

import random

import pytest

from concord.domain import Combiner, Statement
from concord.errors import DomainMismatchError
from concord.gadgets import (
    moral_machine_fixture,
    nonexistence_fixture,
    nonuniqueness_fixture,
    subset_sum_gadget,
)
from concord.models import HierarchicalModel, satisfies, satisfies_set
from concord.oracle import subset_sum_brute
from concord.reasoner import is_consistent, is_consistent_hier


class TestMoralMachine:
    def test_space_and_statements(self):
        profile, alts = moral_machine_fixture()
        assert profile.space.variables == ("adult", "child", "dog")
        assert profile.combiner == Combiner("sum")
        assert profile.model_class == "hier"
        assert alts["alpha"].values == (1, 4, 0)
        assert alts["beta"].values == (2, 3, 3)
        assert alts["gamma"].values == (1, 3, 5)
        assert [sh.name for sh in profile.stakeholders] == ["p1", "p2"]

    def test_humans_first_model_claims(self):
        profile, alts = moral_machine_fixture()
        sp, c = profile.space, profile.combiner
        m = HierarchicalModel.from_names(sp, ("adult", "child"), ("child",))
        assert satisfies(m, Statement(alts["alpha"], alts["beta"], True), c)
        assert satisfies(m, Statement(alts["alpha"], alts["gamma"], True), c)

    def test_dog_model_claims(self):
        profile, alts = moral_machine_fixture()
        sp, c = profile.space, profile.combiner
        m = HierarchicalModel.from_names(sp, ("dog",))
        assert satisfies(m, Statement(alts["beta"], alts["alpha"], True), c)
        assert not satisfies(m, Statement(alts["alpha"], alts["gamma"], True), c)


class TestNonuniqueness:
    def test_structure(self):
        profile, alts = nonuniqueness_fixture()
        assert profile.space.variables == ("x", "y", "z", "w")
        assert profile.combiner.kind == "table"
        assert alts["gamma"].values == (1, 0, 1, 0)
        assert alts["delta"].values == (0, 1, 0, 1)

    def test_individually_consistent_jointly_not(self):
        profile, _ = nonuniqueness_fixture()
        sp, c = profile.space, profile.combiner
        for sh in profile.stakeholders:
            assert is_consistent(sh.statements, sp, c, "hier").consistent
        assert not is_consistent(
            profile.union_statements(), sp, c, "hier"
        ).consistent

    def test_z_then_y_model_satisfies_both(self):
        """({z},{y}) supports the second stakeholder and still prefers gamma."""
        profile, alts = nonuniqueness_fixture()
        sp, c = profile.space, profile.combiner
        m = HierarchicalModel.from_names(sp, ("z",), ("y",))
        beta_over_alpha = Statement(alts["beta"], alts["alpha"], True)
        psi1 = Statement(alts["gamma"], alts["delta"], True)
        assert satisfies(m, beta_over_alpha, c)
        assert satisfies(m, psi1, c)


class TestNonexistence:
    def test_structure(self):
        profile, alts = nonexistence_fixture()
        assert profile.space.variables == ("x", "y")
        assert profile.combiner == Combiner("and")
        assert alts["gamma"].values == (1, 1)
        assert alts["delta"].values == (0, 0)
        phi = [sh.statements for sh in profile.stakeholders]
        assert phi[0] == (Statement(alts["alpha"], alts["gamma"], False),)
        assert phi[1] == (Statement(alts["beta"], alts["gamma"], False),)

    def test_individually_consistent_jointly_not(self):
        profile, _ = nonexistence_fixture()
        sp, c = profile.space, profile.combiner
        for sh in profile.stakeholders:
            assert is_consistent(sh.statements, sp, c, "hier").consistent
        assert not is_consistent(
            profile.union_statements(), sp, c, "hier"
        ).consistent


class TestSubsetSumGadget:
    def test_shape(self):
        profile = subset_sum_gadget((3, 5, 7), 8)
        assert profile.space.variables == ("v3", "v5", "v7", "vT")
        assert profile.space.size == 3 + 1
        assert len(profile.stakeholders) == 1
        assert len(profile.stakeholders[0].statements) == 3

    def test_duplicate_values_get_distinct_names(self):
        profile = subset_sum_gadget((5, 5), 10)
        assert profile.space.variables == ("v5", "v5_2", "vT")

    def test_example_consistent_with_expected_witness(self):
        profile = subset_sum_gadget((1, 2), 3)
        res = is_consistent_hier(
            profile.union_statements(), profile.space, profile.combiner
        )
        assert res.consistent
        assert res.witness.levels[0] == frozenset({0, 1, 2})

    def test_example_inconsistent(self):
        profile = subset_sum_gadget((2, 4), 5)
        res = is_consistent_hier(
            profile.union_statements(), profile.space, profile.combiner
        )
        assert not res.consistent

    def test_three_five_seven(self):
        profile = subset_sum_gadget((3, 5, 7), 8)
        res = is_consistent_hier(
            profile.union_statements(), profile.space, profile.combiner
        )
        assert res.consistent
        # v3 + v5 = 8, so the witness level holds those two plus the target marker
        assert res.witness.levels[0] == frozenset({0, 1, 3})

    def test_validation(self):
        with pytest.raises(DomainMismatchError):
            subset_sum_gadget((), 3)
        with pytest.raises(DomainMismatchError):
            subset_sum_gadget((0, 2), 3)
        with pytest.raises(DomainMismatchError):
            subset_sum_gadget((2, 3), 0)

    def test_agreement_with_brute(self):
        rng = random.Random(20260822)
        for _ in range(50):
            k = rng.randint(1, 6)
            values = tuple(rng.randint(1, 20) for _ in range(k))
            target = rng.randint(1, 50)
            profile = subset_sum_gadget(values, target)
            res = is_consistent_hier(
                profile.union_statements(), profile.space, profile.combiner
            )
            assert res.consistent == subset_sum_brute(values, target), (
                values, target,
            )
            if res.consistent:
                assert satisfies_set(
                    res.witness, profile.union_statements(), profile.combiner
                )
