"""Schur expansions and Schubert calculus on Gr(r+1, d+1).

Schubert classes are realised as Schur polynomials in k = r+1 variables (the
Chern roots of the dual tautological sub-bundle) modulo every s_lambda whose
first part exceeds d - r.  With this presentation the class indexed by
``lam`` is ``s_lam`` itself, partitions live in the (r+1) x (d-r) rectangle,
and the point class is the full rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotSymmetric, OrbitCalcError, WeightMismatch
from .polycore import SYMMETRIC, Poly, normalize, root_context, symmetry_check


class Partition(tuple):
    """Weakly decreasing non-negative integers with trailing zeros trimmed."""

    def __new__(cls, parts=()):
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def fits(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def padded(self, k: int) -> tuple:
        return tuple(self) + (0,) * (k - len(self))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def rectangle(r: int, d: int) -> Partition:
    return Partition([d - r] * (r + 1))


def partitions_in_box(rows: int, cols: int, size: int | None = None):
    def rec(rem_rows, max_part):
        if rem_rows == 0:
            yield ()
            return
        for first in range(max_part, -1, -1):
            for rest in rec(rem_rows - 1, first):
                yield (first,) + rest

    for p in rec(rows, cols):
        lam = Partition(p)
        if size is None or lam.size == size:
            yield lam


@dataclass(frozen=True)
class SchubertClass:
    """Integer combination of Schubert classes of Gr(r+1, d+1)."""

    r: int
    d: int
    coeffs: tuple  # sorted ((Partition, int), ...)

    def __init__(self, r: int, d: int, coeffs=None):
        clean: dict[Partition, int] = {}
        for lam, c in dict(coeffs or {}).items():
            lam = Partition(lam)
            if not lam.fits(r + 1, d - r):
                raise ValueError(f"{lam!r} does not fit the {r + 1}x{d - r} rectangle")
            c = normalize(c)
            if not isinstance(c, int):
                raise OrbitCalcError(f"non-integer Schubert coefficient {c} at {lam!r}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        items = tuple(sorted((lam, c) for lam, c in clean.items() if c))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __getitem__(self, lam) -> int:
        return self.as_dict().get(Partition(lam), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        self._check(other)
        out = self.as_dict()
        for lam, c in other.coeffs:
            out[lam] = out.get(lam, 0) + c
        return SchubertClass(self.r, self.d, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "SchubertClass":
        return SchubertClass(self.r, self.d, {lam: c * v for lam, v in self.coeffs})

    def __mul__(self, other):
        if isinstance(other, SchubertClass):
            return schubert_product(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def _check(self, other):
        if (self.r, self.d) != (other.r, other.d):
            raise ValueError("Schubert classes on different Grassmannians")

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in sorted(self.coeffs, reverse=True):
            label = "O[" + ",".join(map(str, lam)) + "]"
            body = f"{abs(c)}*{label}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def to_json(self) -> list:
        return [{"partition": list(lam), "coef": c} for lam, c in self.coeffs]

    @classmethod
    def from_json(cls, r: int, d: int, items) -> "SchubertClass":
        return cls(r, d, {Partition(it["partition"]): int(it["coef"]) for it in items})


@lru_cache(maxsize=None)
def _vandermonde(k: int) -> Poly:
    ctx = root_context(k)
    v = Poly.const(ctx, 1)
    for i in range(k):
        for j in range(i + 1, k):
            v = v * (Poly.var(ctx, ctx[i]) - Poly.var(ctx, ctx[j]))
    return v


def schur_expand(p: Poly) -> dict:
    """Coefficients c_lam with p = sum c_lam s_lam(x_0, ..., x_{k-1}).

    Bialternant method: in p times the Vandermonde, the coefficient of
    x^(lam + delta) with strictly decreasing exponents is exactly c_lam.
    """
    if symmetry_check(p, "all") != SYMMETRIC:
        raise NotSymmetric("schur_expand needs a symmetric polynomial")
    k = len(p.ctx)
    if p.is_zero():
        return {}
    prod = Poly._raw(root_context(k), dict(p.terms)) * _vandermonde(k)
    delta = tuple(range(k - 1, -1, -1))
    out = {}
    for e, c in prod.terms.items():
        if all(x > y for x, y in zip(e, e[1:])):
            out[Partition(x - y for x, y in zip(e, delta))] = c
    return out


@lru_cache(maxsize=None)
def schur_polynomial(lam: tuple, k: int) -> Poly:
    """s_lam(x_0, ..., x_{k-1}) by peeling horizontal strips off the last variable."""
    lam = Partition(lam)
    ctx = root_context(k)
    if len(lam) > k:
        return Poly.zero(ctx)
    if k == 0:
        return Poly.const(ctx, 1 if not lam else 0)
    if not lam:
        return Poly.const(ctx, 1)
    out: dict[tuple, int] = {}
    padded = lam.padded(k)
    for mu in _strip_predecessors(padded):
        strip = sum(padded) - sum(mu)
        sub = schur_polynomial(Partition(mu), k - 1)
        for e, c in sub.terms.items():
            key = e + (strip,)
            out[key] = out.get(key, 0) + c
    return Poly(ctx, out)


def _strip_predecessors(lam: tuple):
    """mu with lam/mu a horizontal strip and len(mu) < len(lam slots)."""
    k = len(lam)
    # interlacing: lam[i+1] <= mu[i] <= lam[i], mu has k-1 parts
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(k - 1)]

    def rec(i):
        if i == k - 1:
            yield ()
            return
        for x in ranges[i]:
            for rest in rec(i + 1):
                yield (x,) + rest

    yield from rec(0)


def schubert_from_schur(r: int, d: int, coeffs: dict) -> SchubertClass:
    """Drop partitions outside the rectangle and require integer coefficients."""
    kept = {}
    for lam, c in coeffs.items():
        if Partition(lam).fits(r + 1, d - r):
            c = normalize(c)
            if not isinstance(c, int):
                raise OrbitCalcError(f"non-integer coefficient {c} for {lam!r}")
            kept[Partition(lam)] = c
    return SchubertClass(r, d, kept)


# Chern roots of the tautological sub-bundle are the negatives of the Schur
# variables; fixed by the quartic pencil table.
MU_TO_ROOT_SIGN = -1


def schur_reduce(p: Poly, r: int, d: int, sign: int = MU_TO_ROOT_SIGN) -> SchubertClass:
    """Schubert class of a symmetric polynomial in r+1 sub-bundle Chern roots.

    ``p`` lives in any context with r+1 variables; variable j becomes
    ``sign * x_j``.
    """
    if len(p.ctx) != r + 1:
        raise ValueError(f"expected {r + 1} variables, got {p.ctx}")
    flipped = {e: (c if sign == 1 or sum(e) % 2 == 0 else -c) for e, c in p.terms.items()}
    q = Poly._raw(root_context(r + 1), flipped)
    return schubert_from_schur(r, d, schur_expand(q))


def schur_combination(cls: SchubertClass) -> Poly:
    k = cls.r + 1
    out = Poly.zero(root_context(k))
    for lam, c in cls.coeffs:
        out = out + schur_polynomial(lam, k).scale(c)
    return out


def schubert_product(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    a._check(b)
    if a.is_zero() or b.is_zero():
        return SchubertClass(a.r, a.d)
    out: dict[Partition, int] = {}
    for la, ca in a.coeffs:
        for lb, cb in b.coeffs:
            for lam, c in _pair_product(la, lb, a.r, a.d):
                out[lam] = out.get(lam, 0) + ca * cb * c
    return SchubertClass(a.r, a.d, out)


@lru_cache(maxsize=None)
def _pair_product(la: Partition, lb: Partition, r: int, d: int) -> tuple:
    k = r + 1
    if la.size + lb.size > k * (d - r):
        return ()
    prod = schur_polynomial(la, k) * schur_polynomial(lb, k)
    expansion = schubert_from_schur(r, d, schur_expand(prod))
    return expansion.coeffs


def schubert_power_product(classes, r: int, d: int) -> SchubertClass:
    result = SchubertClass(r, d, {Partition(): 1})
    for c in classes:
        result = schubert_product(result, c)
        if result.is_zero():
            break
    return result


def sequence_partition(seq) -> Partition:
    """(a_r - r, ..., a_1 - 1, a_0): the Schubert condition of a vanishing sequence."""
    return Partition(a - i for i, a in reversed(list(enumerate(seq))))


def profile_exists(profile) -> bool:
    """Whether some g^r_d on P^1 has this ramification profile."""
    r, d = profile.r, profile.d
    n = (r + 1) * (d - r)
    if profile.total_weight != n:
        raise WeightMismatch(f"profile weight {profile.total_weight} != {n}")
    parts = sorted((sequence_partition(s) for s in profile.sequences), key=lambda p: -p.size)
    classes = [SchubertClass(r, d, {lam: 1}) for lam in parts]
    return not schubert_power_product(classes, r, d).is_zero()


def point_class_degree(cls: SchubertClass) -> int:
    return cls[rectangle(cls.r, cls.d)]
