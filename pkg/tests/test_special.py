from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_tree
from orbitcalc.errors import InvalidTree, NonexistentProfile, OrbitCalcError, WeightMismatch
from orbitcalc.schubert import Partition
from orbitcalc.series import RamificationProfile
from orbitcalc.special import (
    CollisionSpec,
    LabelledTree,
    Relation,
    WeightTree,
    collide,
    complementary,
    contraction_additive,
    decompose,
    predegree,
    predegree_brute_force,
    substitute_relation,
    validate_tree,
)


def star_tree() -> LabelledTree:
    return LabelledTree.build(
        1,
        4,
        ["A", "B", "C", "D"],
        [("A", "B", (1, 2)), ("A", "C", (0, 3)), ("A", "D", (0, 3))],
        [(v, (0, 2)) for v in "BBCCDD"],
    )


def P(*seqs, r=1, d=4):
    return RamificationProfile(r, d, tuple(seqs))


def test_complementary():
    assert complementary((1, 2), 4) == (2, 3)
    assert complementary((0, 3), 4) == (1, 4)
    with pytest.raises(ValueError):
        complementary((0, 5), 4)


class TestStarTree:
    def test_relation(self):
        rel = decompose(star_tree())
        assert rel.lhs == P(*[(0, 2)] * 6)
        assert dict((p, c) for c, p in rel.grouped()) == {
            P((1, 2), (0, 3), (0, 3)): 1,
            P((2, 3), (0, 2), (0, 2)): 1,
            P((1, 4), (0, 2), (0, 2)): 2,
        }
        assert rel.to_text() == (
            "WOrb{(0,2)x6} = WOrb{(1,2),(0,3)x2} + WOrb{(2,3),(0,2)x2} + 2*WOrb{(1,4),(0,2)x2}"
        )

    def test_verifies(self):
        v = decompose(star_tree()).verify()
        assert v.ok and v.difference.is_zero()
        assert v.to_json()["result"] == "PASS"

    def test_schubert_sides(self):
        lhs, terms = decompose(star_tree()).schubert_sides()
        assert lhs.as_dict() == {Partition((3,)): 24, Partition((2, 1)): 48}
        total = terms[0][1].scale(terms[0][0])
        for c, s in terms[1:]:
            total = total + s.scale(c)
        assert total == lhs

    def test_json_roundtrip(self):
        t = star_tree()
        data = t.to_json()
        back = LabelledTree.build(
            data["r"],
            data["d"],
            data["vertices"],
            [(e["u"], e["v"], e["label_u"], e["label_v"]) for e in data["edges"]],
            [(h["vertex"], h["label"]) for h in data["dangling"]],
        )
        assert back == t


class TestValidation:
    def test_complementarity(self):
        t = LabelledTree.build(1, 4, ["A", "B"], [("A", "B", (1, 2), (1, 3))], [])
        assert "complementarity" in validate_tree(t).kinds()

    def test_cycle(self):
        t = LabelledTree.build(
            1, 4, ["A", "B"], [("A", "B", (0, 3)), ("B", "A", (0, 3))], [("A", (0, 2))] * 2
        )
        assert "tree" in validate_tree(t).kinds()

    def test_label_out_of_range(self):
        t = LabelledTree.build(1, 4, ["A"], [], [("A", (0, 5))])
        assert validate_tree(t).kinds() == {"label"}

    def test_weight(self):
        t = LabelledTree.build(1, 4, ["A"], [], [("A", (0, 2))] * 5)
        assert validate_tree(t).kinds() == {"weight"}

    def test_existence(self):
        t = LabelledTree.build(1, 4, ["A"], [], [("A", (0, 4)), ("A", (1, 3))])
        assert validate_tree(t).kinds() == {"existence"}
        assert validate_tree(t, check_existence=False).ok

    def test_decompose_rejects(self):
        t = LabelledTree.build(1, 4, ["A"], [], [("A", (0, 2))] * 5)
        with pytest.raises(InvalidTree):
            decompose(t)


class TestCollisions:
    def test_two_simple_points(self):
        spec = CollisionSpec(1, 4, ((0, 2), (0, 2)), ((0, 2),) * 4, (0, 3))
        rel = collide(spec)
        assert spec.c_prime == (1, 4)
        assert rel.verify().ok
        assert {p for _, p in rel.grouped()} == {P((1, 4), (0, 2), (0, 2)), P((0, 3), *[(0, 2)] * 4)}

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            collide(CollisionSpec(1, 4, ((0, 2),), ((0, 2),) * 5, (0, 3)))

    def test_nonexistent(self):
        with pytest.raises(NonexistentProfile):
            collide(CollisionSpec(1, 4, ((1, 3),), ((0, 3), (0, 2)), (0, 4)))

    def test_substitution_keeps_identity(self):
        outer = collide(CollisionSpec(1, 4, ((0, 2), (0, 2)), ((0, 2),) * 4, (0, 3)))
        target = P((0, 3), *[(0, 2)] * 4)
        inner = collide(CollisionSpec(1, 4, ((0, 2), (0, 2)), ((0, 3), (0, 2), (0, 2)), (0, 3)))
        assert inner.lhs == target
        merged = substitute_relation(outer, target, inner)
        assert len(merged.rhs) == 3 and merged.verify().ok
        with pytest.raises(OrbitCalcError):
            substitute_relation(outer, P((0, 4), (0, 4)), inner)

    def test_failed_verification_reports_difference(self):
        wrong = Relation(1, 4, P(*[(0, 2)] * 6), ((1, P((0, 3), (0, 3), (0, 3))),))
        v = wrong.verify()
        assert not v.ok and not v.difference.is_zero()
        assert "difference" in v.to_json()


def test_random_trees_verify():
    rng = random.Random(21)
    for _ in range(8):
        t = random_tree(rng, rng.randint(3, 5), rng.randint(1, 3))
        assert validate_tree(t).ok
        assert decompose(t).verify().ok
        assert contraction_additive(WeightTree.from_labelled(t))


class TestPredegree:
    def test_values(self):
        assert predegree([1] * 6) == 120
        assert predegree([1, 1, 1]) == 6
        assert predegree([2, 2]) == 0
        with pytest.raises(ValueError):
            predegree([0, 3])

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=7))
    def test_brute_force(self, m):
        assert predegree(m) == predegree_brute_force(m)


@st.composite
def weight_trees(draw):
    """Random trees with edge weights summing to n and vertex weights to n."""
    n = draw(st.integers(3, 8))
    k = draw(st.integers(1, 5))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, k)]
    edges = []
    for child, par in enumerate(parents, start=1):
        wu = draw(st.integers(0, n))
        edges.append((f"v{par}", f"v{child}", wu, n - wu))
    names = [f"v{i}" for i in range(k)]
    dangling = []
    for vx in names:
        used = sum(wu for u, _, wu, _ in edges if u == vx) + sum(wv for _, v, _, wv in edges if v == vx)
        if used > n:
            return None
        left = n - used
        while left:
            w = draw(st.integers(1, left))
            dangling.append((vx, w))
            left -= w
    return WeightTree(n, tuple(names), tuple(edges), tuple(dangling))


@settings(max_examples=80, deadline=None)
@given(weight_trees())
def test_contraction_additivity_property(t):
    if t is None:
        return
    assert contraction_additive(t)


def test_contraction_rejects_bad_weights():
    t = WeightTree(6, ("a", "b"), (("a", "b", 2, 3),), (("a", 4), ("b", 3)))
    with pytest.raises(InvalidTree):
        contraction_additive(t)
