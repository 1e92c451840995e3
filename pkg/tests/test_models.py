"""Importance models and satisfaction."""

import itertools

import pytest

from concord.domain import Combiner, Statement, VariableSpace, complement
from concord.errors import DomainMismatchError
from concord.models import (
    Comparison,
    HierarchicalModel,
    LexicographicModel,
    compare,
    level_value,
    satisfies,
    satisfies_set,
)
from conftest import alt, stmt

SPACE3 = VariableSpace(
    ("adult", "child", "dog"), ((0, 1, 2, 3, 4, 5),) * 3
)
SUM = Combiner("sum")
ALPHA = alt(1, 4, 0)
BETA = alt(2, 3, 3)
GAMMA = alt(1, 3, 5)


def hm(*levels):
    return HierarchicalModel.from_names(SPACE3, *levels)


def test_level_value_sums_humans():
    assert level_value(frozenset({0, 1}), ALPHA, SUM) == 5
    assert level_value(frozenset({0, 1}), BETA, SUM) == 5


def test_level_value_bool_and():
    c = Combiner("and")
    assert level_value(frozenset({0, 1}), alt(1, 1), c) == 1
    assert level_value(frozenset({0, 1}), alt(0, 0), c) == 0


def test_compare_humans_then_children():
    m = hm(("adult", "child"), ("child",))
    assert compare(m, ALPHA, GAMMA, SUM) is Comparison.LEFT


def test_compare_humans_then_dogs():
    m = hm(("adult", "child"), ("dog",))
    assert compare(m, BETA, ALPHA, SUM) is Comparison.LEFT


def test_satisfies_dog_model():
    m = hm(("dog",))
    assert satisfies(m, Statement(BETA, ALPHA, True), SUM)
    assert not satisfies(m, Statement(ALPHA, GAMMA, True), SUM)


def test_satisfies_set_nonexistence_first_levels():
    """Of the depth-1 models over {x,y}, only ({x}) satisfies (1,0) >= (1,1)."""
    sp = VariableSpace.binary(("x", "y"))
    c = Combiner("and")
    phi = (stmt((1, 0), (1, 1), strict=False),)
    x_only = HierarchicalModel.from_names(sp, ("x",))
    y_only = HierarchicalModel.from_names(sp, ("y",))
    both = HierarchicalModel.from_names(sp, ("x", "y"))
    assert satisfies_set(x_only, phi, c)
    assert not satisfies_set(y_only, phi, c)
    assert not satisfies_set(both, phi, c)


def test_lex_model_drops_repeats():
    m = LexicographicModel((0, 1, 0, 2, 1))
    assert m.variables == (0, 1, 2)


def test_lex_as_hierarchical():
    m = LexicographicModel((2, 0))
    assert m.as_hierarchical().levels == (frozenset({2}), frozenset({0}))


def test_render():
    assert hm(("adult", "child"), ("dog",)).render(SPACE3) == "({adult,child},{dog})"
    assert LexicographicModel((1, 0)).render(SPACE3) == "(child,adult)"


def test_empty_model_rejected():
    with pytest.raises(DomainMismatchError):
        HierarchicalModel(())
    with pytest.raises(DomainMismatchError):
        HierarchicalModel((frozenset(),))
    with pytest.raises(DomainMismatchError):
        LexicographicModel(())


def _all_hier_models(n, max_depth):
    levels = [
        frozenset(c)
        for k in range(1, n + 1)
        for c in itertools.combinations(range(n), k)
    ]
    for depth in range(1, max_depth + 1):
        for seq in itertools.permutations(levels, depth):
            yield HierarchicalModel(tuple(seq))


def test_total_preorder_small_exhaustive():
    """compare is exactly one of LEFT/RIGHT/TIE and the induced order is transitive."""
    sp = VariableSpace(("x", "y"), ((0, 1, 2), (0, 1, 2)))
    c = Combiner("sum")
    alts = list(sp.alternatives())
    for m in _all_hier_models(2, 2):
        results = {}
        for a, b in itertools.product(alts, repeat=2):
            r = compare(m, a, b, c)
            assert isinstance(r, Comparison)
            results[(a, b)] = r
        # antisymmetry of the strict part and consistency of ties
        for a, b in itertools.product(alts, repeat=2):
            ab, ba = results[(a, b)], results[(b, a)]
            if ab is Comparison.LEFT:
                assert ba is Comparison.RIGHT
            elif ab is Comparison.TIE:
                assert ba is Comparison.TIE
        # transitivity of "a at least as good as b"
        def geq(a, b):
            return results[(a, b)] is not Comparison.RIGHT

        for a, b, d in itertools.product(alts, repeat=3):
            if geq(a, b) and geq(b, d):
                assert geq(a, d)


def test_prefix_decisiveness():
    """Appending levels never changes an already-decided comparison."""
    sp = VariableSpace.binary(("x", "y", "z"))
    c = Combiner("sum")
    alts = list(sp.alternatives())
    base_levels = [frozenset({0}), frozenset({1, 2})]
    extra = frozenset({2})
    m1 = HierarchicalModel(tuple(base_levels))
    m2 = HierarchicalModel(tuple(base_levels) + (extra,))
    for a, b in itertools.product(alts, repeat=2):
        r1 = compare(m1, a, b, c)
        if r1 is not Comparison.TIE:
            assert compare(m2, a, b, c) is r1


def test_noop_level_elimination():
    """A level on which every statement ties can be deleted."""
    sp = VariableSpace.binary(("x", "y", "z"))
    c = Combiner("sum")
    statements = (
        stmt((1, 0, 1), (0, 1, 1)),
        stmt((0, 0, 1), (0, 1, 1), strict=False),
    )
    # both statements tie on z
    noop = frozenset({2})
    for levels in [
        (noop, frozenset({0}), frozenset({1})),
        (frozenset({0}), noop, frozenset({1})),
    ]:
        with_noop = HierarchicalModel(levels)
        without = HierarchicalModel(tuple(lv for lv in levels if lv != noop))
        assert satisfies_set(with_noop, statements, c) == satisfies_set(
            without, statements, c
        )


def test_complement_xor_over_enumerated_models():
    """Every model satisfies exactly one of s and complement(s)."""
    sp = VariableSpace.binary(("x", "y"))
    c = Combiner("and")
    alts = list(sp.alternatives())
    universe = [
        Statement(a, b, strict)
        for a, b in itertools.product(alts, repeat=2)
        for strict in (True, False)
    ]
    for m in _all_hier_models(2, 2):
        for s in universe:
            assert satisfies(m, s, c) != satisfies(m, complement(s), c)
