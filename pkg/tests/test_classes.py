from __future__ import annotations

import random

import pytest

from generators import random_profile, random_series, sequences
from orbitcalc.classes import (
    is_psi_well_formed,
    nonequivariant_payload,
    numerator,
    phi,
    psi,
    schubert_class_of,
    series_class,
    weighted_orbit_class,
)
from orbitcalc.errors import CodimNegative, InvalidSequence, WeightMismatch
from orbitcalc.polycore import Poly, equivariant_context, substitute
from orbitcalc.schubert import Partition, profile_exists
from orbitcalc.series import RamificationProfile, full_weight, ramification_profile
from orbitcalc.special import predegree


def prof(r, d, *seqs):
    return RamificationProfile(r, d, tuple(seqs))


def test_phi_small():
    ctx = equivariant_context(0)
    # r=0, d=1, sequence (0): only i=1 is missing, factor w2 - mu0
    assert phi((0,), 0, 1) == Poly.parse("w2 - mu0", ctx)
    assert psi((0,), 0, 1) == Poly.parse("w2 - w1", ctx)


def test_phi_is_a_product():
    r, d, seq = 1, 3, (0, 2)
    ctx = equivariant_context(r)
    expect = Poly.const(ctx, 1)
    for j in range(r + 1):
        for i in (1, 3):
            expect = expect * Poly.parse(f"{d - i}*w1 + {i}*w2 - mu{j}", ctx)
    assert phi(seq, r, d) == expect


def test_phi_rejects_bad_sequence():
    with pytest.raises(InvalidSequence):
        phi((0, 5), 1, 4)


@pytest.mark.parametrize("seq", [(0, 1), (0, 2), (1, 4), (0, 3), (2, 3)])
def test_psi_well_formed(seq):
    assert is_psi_well_formed(seq, 1, 4)


def test_complementary_psi_cancel():
    # psi_a + psi_a' = 0, which forces every two-point class to vanish
    for r in range(3):
        for d in range(r + 1, 7):
            for s in sequences(r, d):
                assert (psi(s, r, d) + psi(s.complementary(d), r, d)).is_zero()


def test_zero_class_two_points():
    assert weighted_orbit_class(prof(1, 4, (0, 4), (0, 4))).is_zero()
    rng = random.Random(2)
    for _ in range(10):
        r = rng.randint(1, 2)
        d = rng.randint(r + 2, 6)
        s = rng.choice(sequences(r, d))
        p = prof(r, d, s, s.complementary(d))
        if p.is_complete() and profile_exists(p):
            cls = weighted_orbit_class(p)
            assert cls.is_zero() and cls.infinite_stabiliser


def test_errors():
    with pytest.raises(WeightMismatch):
        weighted_orbit_class(prof(1, 4, *[(0, 2)] * 5))
    with pytest.raises(CodimNegative):
        weighted_orbit_class(prof(1, 2, (0, 2), (0, 2)))
    with pytest.raises(CodimNegative):
        weighted_orbit_class(prof(0, 2, (1,), (1,)))


def test_numerator_divisible_three_times_only():
    p = prof(1, 4, *[(0, 2)] * 6)
    num = numerator(p)
    ctx = num.ctx
    # vanishes on w1 = w2 to order exactly 3
    w = Poly.var(ctx, "w1")
    on_diag = substitute(num, {"w2": w})
    assert on_diag.is_zero()
    cls = weighted_orbit_class(p)
    assert substitute(cls.payload, {"w2": w}) != Poly.zero(ctx)


def test_invariants_random():
    rng = random.Random(4)
    for _ in range(25):
        r = rng.randint(0, 2)
        d = rng.randint(r + 1, 7)
        if full_weight(r, d) < 3:
            continue
        cls = weighted_orbit_class(random_profile(rng, r, d))
        assert cls.check_invariants() == []


def test_generic_cubic_and_quartic():
    # a binary cubic with three roots has stabiliser S_3 in an open orbit
    assert weighted_orbit_class(prof(0, 3, (1,), (1,), (1,))).payload == Poly.const(equivariant_context(0), 6)
    # four distinct roots: stabiliser of order 4, orbit closure a sextic hypersurface
    sch = schubert_class_of(prof(0, 4, *[(1,)] * 4))
    assert sch.as_dict() == {Partition((1,)): 24}


@pytest.mark.parametrize("m", [(1, 1, 1, 2), (2, 2, 1), (3, 1, 1, 1), (2, 1, 1, 1, 1)])
def test_r0_matches_predegree(m):
    d = sum(m)
    sch = schubert_class_of(prof(0, d, *[(x,) for x in m]))
    assert sch[(d - 3,)] == predegree(m)


def test_series_class_uses_profile():
    rng = random.Random(9)
    for _ in range(5):
        S = random_series(rng, 1, 4)
        assert series_class(S).payload == weighted_orbit_class(ramification_profile(S)).payload


def test_nonequivariant_payload_drops_omega():
    cls = weighted_orbit_class(prof(1, 4, *[(0, 2)] * 6))
    p = nonequivariant_payload(cls)
    assert p.ctx == ("mu0", "mu1")
    assert p.total_degree() == 3
