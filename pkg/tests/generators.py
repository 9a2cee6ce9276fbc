"""Seeded random objects shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from orbitcalc.errors import DegenerateBasis
from orbitcalc.schubert import profile_exists
from orbitcalc.series import (
    BinaryForm,
    LinearSeries,
    ProjPoint,
    RamificationProfile,
    VanishingSequence,
    full_weight,
    monomial_series,
)
from orbitcalc.special import LabelledTree, complementary


def sequences(r: int, d: int, max_weight: int | None = None):
    """All non-generic vanishing sequences for (r, d), optionally weight-bounded."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == r + 1:
            s = VanishingSequence(prefix)
            if not s.is_generic() and (max_weight is None or s.weight <= max_weight):
                out.append(s)
            return
        for a in range(lo, d + 1):
            rec(prefix + [a], a + 1)

    rec([], 0)
    return out


def random_profile(rng: random.Random, r: int, d: int, exists: bool | None = None) -> RamificationProfile:
    """Random weight-valid profile; ``exists=True`` retries until realisable."""
    n = full_weight(r, d)
    while True:
        left, seqs = n, []
        while left:
            seqs.append(rng.choice(sequences(r, d, left)))
            left -= seqs[-1].weight
        prof = RamificationProfile(r, d, tuple(seqs))
        if exists is None or profile_exists(prof) == exists:
            return prof


def random_rational(rng: random.Random, bound: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def random_invertible(rng: random.Random, n: int, bound: int = 3) -> list[list[int]]:
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if _det(m) != 0:
            return m


def _det(m) -> Fraction:
    m = [[Fraction(x) for x in row] for row in m]
    n, det = len(m), Fraction(1)
    for i in range(n):
        piv = next((k for k in range(i, n) if m[k][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for k in range(i + 1, n):
            f = m[k][i] / m[i][i]
            m[k] = [a - f * b for a, b in zip(m[k], m[i])]
    return det


def random_gl2(rng: random.Random, bound: int = 3) -> tuple:
    (a, b), (c, e) = random_invertible(rng, 2, bound)
    return a, b, c, e


def _form_vanishing_at(rng, d, point: ProjPoint, order: int) -> BinaryForm:
    """(p2 v1 - p1 v2)^order times a random form of degree d - order."""
    p1, p2 = point.coords
    lin = BinaryForm(1, (p2, -p1))
    out = BinaryForm(d - order, tuple(rng.randint(-3, 3) for _ in range(d - order + 1)))
    for _ in range(order):
        out = _mul(out, lin)
    return out


def _mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    # entry i is the v2^i coefficient, so products are convolutions
    out = [0] * (f.d + g.d + 1)
    for i, x in enumerate(f.coeffs):
        for j, y in enumerate(g.coeffs):
            out[i + j] += x * y
    return BinaryForm(f.d + g.d, tuple(out))


def random_series(rng: random.Random, r: int, d: int) -> LinearSeries:
    """Random series; about half are built to ramify at chosen rational points."""
    while True:
        kind = rng.random()
        try:
            if kind < 0.35:
                forms = [BinaryForm(d, tuple(rng.randint(-4, 4) for _ in range(d + 1))) for _ in range(r + 1)]
                return LinearSeries(r, d, tuple(forms))
            if kind < 0.6:
                seq = rng.choice(sequences(r, d) or [VanishingSequence(range(r + 1))])
                S = monomial_series(r, d, seq)
                return S.transform(*random_gl2(rng)).change_basis(random_invertible(rng, r + 1))
            p = rng.choice([ProjPoint.infinity(), ProjPoint(0, 1), ProjPoint.affine(random_rational(rng))])
            orders = sorted(rng.sample(range(d + 1), r + 1))
            forms = [_form_vanishing_at(rng, d, p, k) for k in orders]
            return LinearSeries(r, d, tuple(forms))
        except DegenerateBasis:
            continue


def random_tree(rng: random.Random, d: int, grow: int, r: int = 1) -> LabelledTree:
    """Valid labelled tree grown by replacing dangling labels with new vertices.

    A dangling label c at v becomes an edge; the new vertex carries the
    complement of c plus fresh dangling labels of total weight wt(c).
    """
    start = random_profile(rng, r, d, exists=True)
    vertices = ["v0"]
    dangling = [("v0", s) for s in start.sequences]
    edges = []
    for k in range(1, grow + 1):
        idx = rng.randrange(len(dangling))
        v, c = dangling[idx]
        cc = complementary(c, d)
        for _ in range(50):
            left, new = c.weight, []
            while left:
                new.append(rng.choice(sequences(r, d, left)))
                left -= new[-1].weight
            prof = RamificationProfile(r, d, tuple(s for s in [cc, *new] if not s.is_generic()))
            if profile_exists(prof):
                break
        else:
            continue
        w = f"v{k}"
        vertices.append(w)
        edges.append((v, w, c, cc))
        dangling.pop(idx)
        dangling.extend((w, s) for s in new)
    return LabelledTree.build(r, d, vertices, edges, dangling)
