"""Small worked examples for each module, pinned exactly."""

from __future__ import annotations

import pytest

from orbitcalc.classes import phi, psi, schubert_class_of, weighted_orbit_class
from orbitcalc.errors import NotDivisible
from orbitcalc.polycore import Poly, equivariant_context, exact_quotient, substitute
from orbitcalc.schubert import Partition, SchubertClass
from orbitcalc.series import (
    AlgebraicPointClass,
    BinaryForm,
    LinearSeries,
    ProjPoint,
    RamificationProfile,
    boundary_orbits,
    canonical_form,
    degenerate_at,
    monomial_series,
    ramification_profile,
    vanishing_sequence,
    vanishing_sequence_algebraic,
    wronskian,
)
from orbitcalc.special import (
    CollisionSpec,
    LabelledTree,
    WeightTree,
    collide,
    contraction_additive,
    decompose,
    predegree,
)

E0 = equivariant_context(0)
E1 = equivariant_context(1)


def S(r, d, *rows):
    return LinearSeries(r, d, tuple(BinaryForm(d, tuple(x)) for x in rows))


def P(r, d, *seqs):
    return RamificationProfile(r, d, tuple(seqs))


class TestPolynomials:
    def test_arith(self):
        assert Poly.parse("mu0 + w1", E1) + Poly.parse("-w1", E1) == Poly.parse("mu0", E1)
        assert Poly.parse("w1 - w2", E1) * Poly.parse("w1 + w2", E1) == Poly.parse("w1^2 - w2^2", E1)
        assert Poly.parse("mu0*w1 + 3", E1) * 0 == Poly.zero(E1)

    def test_quotients(self):
        w = Poly.parse("w1 - w2", E1)
        assert exact_quotient(Poly.parse("w1^2 - w2^2", E1), w) == Poly.parse("w1 + w2", E1)
        q = Poly.parse("mu0", E1) * w**3
        for _ in range(3):
            q = exact_quotient(q, w)
        assert q == Poly.parse("mu0", E1)
        with pytest.raises(NotDivisible):
            exact_quotient(Poly.parse("w1 - w2 + 1", E1), w)

    def test_substitute(self):
        p = Poly.parse("3*w1 + w2 - mu0", E1)
        assert substitute(p, {"w1": 0, "w2": 0}) == Poly.parse("-mu0", E1)
        assert substitute(p, {"mu0": Poly.var(E1, "mu0")}) == p
        swap = {"w1": Poly.var(E1, "w2"), "w2": Poly.var(E1, "w1")}
        assert substitute(substitute(p, swap), swap) == p


class TestSeries:
    def test_algebraic_monomial(self):
        got = vanishing_sequence_algebraic(S(1, 3, (1, 0, 0, 0), (0, 0, 0, 1)), AlgebraicPointClass((0, 1)))
        assert [tuple(s) for _, s in got] == [(0, 3)]

    def test_algebraic_sqrt2(self):
        # <(v1^2 - 2 v2^2)^2, v2^4> at the roots of t^2 - 2
        series = S(1, 4, (1, 0, -4, 0, 4), (0, 0, 0, 0, 1))
        got = vanishing_sequence_algebraic(series, AlgebraicPointClass((-2, 0, 1)))
        assert [(g, tuple(s)) for g, s in got] == [((-2, 0, 1), (0, 2))]

    def test_algebraic_uniform_split(self):
        # <v1^2 (v1 - v2)^2, v2^4> is ramified alike at t = 0 and t = 1
        series = S(1, 4, (1, -2, 1, 0, 0), (0, 0, 0, 0, 1))
        for p in (ProjPoint(0, 1), ProjPoint(1, 1)):
            assert vanishing_sequence(series, p) == (0, 2)
        got = vanishing_sequence_algebraic(series, AlgebraicPointClass((0, -1, 1)))
        assert [(g, tuple(s)) for g, s in got] == [((0, -1, 1), (0, 2))]

    def test_wronskian_r0_is_form(self):
        F = BinaryForm(3, (2, -4, 0, 6))
        assert wronskian(LinearSeries(0, 3, (F,))) == canonical_form(F)

    def test_profiles(self):
        assert ramification_profile(S(1, 2, (1, 0, 0), (0, 0, 1))) == P(1, 2, (0, 2), (0, 2))
        assert ramification_profile(monomial_series(1, 4, (0, 4))) == P(1, 4, (0, 4), (0, 4))

    def test_rational_quartic_pencil(self):
        series = S(1, 4, (1, 0, -10, 0, 41), (0, 0, 1, 0, -5))
        assert wronskian(series).to_text() == "v1^5*v2 - 10*v1^3*v2^3 + 9*v1*v2^5"
        assert ramification_profile(series) == P(1, 4, *[(0, 2)] * 6)
        for p in [ProjPoint.infinity(), ProjPoint(0, 1), ProjPoint(1, 1), ProjPoint(-1, 1), ProjPoint(3, 1), ProjPoint(-3, 1)]:
            assert vanishing_sequence(series, p) == (0, 2) == degenerate_at(series, p)
        assert boundary_orbits(series) == [((0, 1), 1), ((0, 2), 2)]

    def test_degenerate_at_unramified(self):
        series = S(1, 4, (1, 0, -10, 0, 41), (0, 0, 1, 0, -5))
        assert degenerate_at(series, ProjPoint(2, 1)) == (0, 1)
        assert degenerate_at(S(1, 2, (1, 0, 0), (1, 2, 1)), ProjPoint.infinity()) == (0, 1)

    def test_boundary_r0(self):
        assert boundary_orbits(S(0, 3, (0, 1, -1, 0))) == [((0,), 1), ((1,), 2)]


class TestClasses:
    def test_phi(self):
        assert phi((0,), 0, 2) == Poly.parse("w1 + w2 - mu0", E0) * Poly.parse("2*w2 - mu0", E0)
        assert phi((0, 1, 2), 2, 2) == Poly.const(equivariant_context(2), 1)

    def test_psi(self):
        want = Poly.parse("w1 + w2 - mu0", E0) * Poly.parse("w2 - w1", E0) * 2
        assert psi((0,), 0, 2) == want
        assert psi((0, 4), 1, 4).is_zero()

    def test_table_rows(self):
        assert schubert_class_of(P(1, 4, (0, 3), *[(0, 2)] * 4)).as_dict() == {
            Partition((3,)): 16, Partition((2, 1)): 40}
        assert schubert_class_of(P(1, 4, (0, 3), (0, 3), (1, 2))).as_dict() == {
            Partition((3,)): 8, Partition((2, 1)): 20}
        assert schubert_class_of(P(1, 4, (0, 3), (0, 3), (0, 3))).as_dict() == {Partition((2, 1)): 24}
        assert schubert_class_of(P(1, 4, (0, 4), (0, 4))) == SchubertClass(1, 4)

    def test_identity_product(self):
        a = SchubertClass(1, 4, {(2, 1): 3, (3,): -1})
        assert SchubertClass(1, 4, {(): 1}) * a == a


class TestSpecial:
    def test_two_point_collision(self):
        rel = collide(CollisionSpec(1, 4, ((0, 2), (0, 2)), ((0, 2),) * 4, (0, 3)))
        assert rel.to_text() == "WOrb{(0,2)x6} = WOrb{(1,4),(0,2)x2} + WOrb{(0,3),(0,2)x4}"

    def test_single_point_collision(self):
        rel = collide(CollisionSpec(1, 4, ((0, 3),), ((0, 2),) * 4, (0, 3)))
        assert rel.verify().ok
        assert weighted_orbit_class(P(1, 4, (0, 3), (1, 4))).is_zero()

    def test_single_vertex(self):
        t = LabelledTree.build(1, 4, ["A"], [], [("A", (0, 2))] * 6)
        rel = decompose(t)
        assert rel.rhs == ((1, rel.lhs),)
        assert contraction_additive(WeightTree.from_labelled(t))

    def test_two_vertex_tree_is_collision(self):
        t = LabelledTree.build(
            1, 4, ["A", "B"], [("A", "B", (1, 4))], [("A", (0, 2))] * 2 + [("B", (0, 2))] * 4
        )
        coll = collide(CollisionSpec(1, 4, ((0, 2), (0, 2)), ((0, 2),) * 4, (0, 3)))
        assert sorted(map(str, (p for _, p in decompose(t).rhs))) == sorted(map(str, (p for _, p in coll.rhs)))

    def test_star_tree_weights(self):
        t = WeightTree(6, ("A", "B", "C", "D"),
                       (("A", "B", 2, 4), ("A", "C", 2, 4), ("A", "D", 2, 4)),
                       tuple((v, 1) for v in "BBCCDD"))
        assert contraction_additive(t)

    def test_predegree_small(self):
        assert predegree([5]) == 0
        assert predegree([3, 2]) == 0
