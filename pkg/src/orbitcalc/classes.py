"""Weighted equivariant orbit classes of linear series on P^1.

The class of a series depends only on its ramification profile B:

    (sum_{b in B} psi_{a(b)} + (2 - |B|) psi_{0..r}) / (w1 - w2)^3

where ``phi_a = prod_j prod_{i not in a} ((d-i) w1 + i w2 - mu_j)`` and
``psi_a`` is its antisymmetrization in (w1, w2).  Outputs are always the
stabiliser-weighted classes; the stabiliser itself is never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CodimNegative, OrbitCalcError
from .polycore import (
    ANTISYMMETRIC,
    SYMMETRIC,
    Poly,
    equivariant_context,
    exact_quotient,
    is_homogeneous,
    substitute,
    symmetry_check,
)
from .schubert import SchubertClass, schur_reduce
from .series import LinearSeries, RamificationProfile, VanishingSequence, full_weight, generic_sequence, ramification_profile


@lru_cache(maxsize=4096)
def _phi(seq: tuple, r: int, d: int) -> Poly:
    ctx = equivariant_context(r)
    missing = [i for i in range(d + 1) if i not in seq]
    # prod_i (L_i - T) as a polynomial in T with coefficients in w1, w2
    wctx = ("w1", "w2")
    coeffs = [Poly.const(wctx, 1)]
    for i in missing:
        L = Poly.linear(wctx, {"w1": d - i, "w2": i})
        nxt = [Poly.zero(wctx)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] = nxt[k] + c * L
            nxt[k + 1] = nxt[k + 1] - c
        coeffs = nxt
    # phi = prod_j P(mu_j); expand one mu at a time
    terms: dict[tuple, int] = {(0, 0): 1}
    for j in range(r + 1):
        new: dict[tuple, int] = {}
        for e, c in terms.items():
            for k, ck in enumerate(coeffs):
                for (a, b), v in ck.terms.items():
                    key = e[:-2] + (k,) + (e[-2] + a, e[-1] + b)
                    new[key] = new.get(key, 0) + c * v
        terms = {e: c for e, c in new.items() if c}
    return Poly(ctx, terms)


def phi(seq, r: int, d: int) -> Poly:
    """prod_{j<=r} prod_{i not in seq} ((d-i) w1 + i w2 - mu_j), expanded."""
    seq = VanishingSequence(seq).check(r, d)
    return _phi(tuple(seq), r, d)


@lru_cache(maxsize=4096)
def _psi(seq: tuple, r: int, d: int) -> Poly:
    p = _phi(seq, r, d)
    return p - p.permute({"w1": "w2", "w2": "w1"})


def psi(seq, r: int, d: int) -> Poly:
    """phi(mu; w1, w2) - phi(mu; w2, w1)."""
    seq = VanishingSequence(seq).check(r, d)
    return _psi(tuple(seq), r, d)


@dataclass(frozen=True)
class EquivariantClass:
    """|Gamma| * [Orb] as a polynomial in mu_0..mu_r, w1, w2.

    ``infinite_stabiliser`` is set when the profile has at most two points:
    such series are fixed by a one-dimensional torus, and the formula then
    returns the class of a degenerate parametrisation rather than an orbit.
    """

    r: int
    d: int
    payload: Poly
    infinite_stabiliser: bool = False

    @property
    def codim(self) -> int:
        return full_weight(self.r, self.d) - 3

    def is_zero(self) -> bool:
        return self.payload.is_zero()

    def __add__(self, other: "EquivariantClass") -> "EquivariantClass":
        if (self.r, self.d) != (other.r, other.d):
            raise ValueError("classes of different (r, d)")
        return EquivariantClass(self.r, self.d, self.payload + other.payload)

    def __sub__(self, other):
        if (self.r, self.d) != (other.r, other.d):
            raise ValueError("classes of different (r, d)")
        return EquivariantClass(self.r, self.d, self.payload - other.payload)

    def scale(self, c: int) -> "EquivariantClass":
        return EquivariantClass(self.r, self.d, self.payload.scale(c), self.infinite_stabiliser)

    def to_text(self) -> str:
        return self.payload.to_text()

    def check_invariants(self) -> list[str]:
        """Names of violated class invariants (empty when all hold)."""
        bad = []
        p = self.payload
        if symmetry_check(p, "omega") != SYMMETRIC:
            bad.append("omega-symmetry")
        if symmetry_check(p, "mu") != SYMMETRIC:
            bad.append("mu-symmetry")
        deg = is_homogeneous(p)
        if deg != "zero" and deg != self.codim:
            bad.append("homogeneity")
        if not p.is_integral():
            bad.append("integrality")
        return bad


def numerator(profile: RamificationProfile) -> Poly:
    """sum_b psi_{a(b)} + (2 - |B|) psi_{0..r}."""
    r, d = profile.r, profile.d
    total = psi(generic_sequence(r), r, d).scale(2 - profile.size)
    for seq, n in sorted(profile.counts().items()):
        total = total + psi(seq, r, d).scale(n)
    return total


def weighted_orbit_class(profile: RamificationProfile) -> EquivariantClass:
    """Weighted equivariant class of any series with this ramification profile."""
    r, d = profile.r, profile.d
    if full_weight(r, d) < 3:
        raise CodimNegative(f"(r+1)(d-r) = {full_weight(r, d)} < 3 for r={r}, d={d}")
    profile.require_complete()
    den = Poly.var(equivariant_context(r), "w1") - Poly.var(equivariant_context(r), "w2")
    q = numerator(profile)
    for _ in range(3):
        q = exact_quotient(q, den)
    cls = EquivariantClass(r, d, q, infinite_stabiliser=profile.size <= 2)
    bad = cls.check_invariants()
    if bad:
        raise OrbitCalcError(f"class violates invariants: {', '.join(bad)}")
    return cls


def series_class(S: LinearSeries) -> EquivariantClass:
    return weighted_orbit_class(ramification_profile(S))


def nonequivariant_payload(cls: EquivariantClass) -> Poly:
    """The payload with w1 = w2 = 0, as a polynomial in mu_0..mu_r only."""
    mus = equivariant_context(cls.r)[:-2]
    return substitute(cls.payload, {"w1": 0, "w2": 0}, ctx=mus)


def nonequivariant_class(cls: EquivariantClass) -> SchubertClass:
    """Image in the Chow ring of Gr(r+1, d+1), in the Schubert basis."""
    return schur_reduce(nonequivariant_payload(cls), cls.r, cls.d)


def schubert_class_of(profile: RamificationProfile) -> SchubertClass:
    return nonequivariant_class(weighted_orbit_class(profile))


def is_psi_well_formed(seq, r: int, d: int) -> bool:
    """psi is antisymmetric in the w's and symmetric in the mu's."""
    p = psi(seq, r, d)
    if p.is_zero():
        return True
    return symmetry_check(p, "omega") == ANTISYMMETRIC and symmetry_check(p, "mu") == SYMMETRIC
