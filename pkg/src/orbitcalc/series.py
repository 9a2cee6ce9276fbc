"""Linear series on the projective line.

Binary forms of degree d are stored as coefficient vectors: entry ``i`` is
the coefficient of ``v1**(d-i) * v2**i``.  A point ``[p1:p2]`` is a zero of
the linear form ``p2*v1 - p1*v2``; in particular ``[1:0]`` is where ``v2``
vanishes, and the local parameter there is ``v2``.

Affine work uses the chart ``v2 = 1`` with coordinate ``t = v1/v2`` unless an
:class:`AlgebraicPointClass` says otherwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import upoly
from .errors import DegenerateBasis, InvalidSequence, OrbitCalcError, WeightMismatch
from .polycore import Poly, Scalar, normalize


# -- vanishing sequences and profiles -------------------------------------


class VanishingSequence(tuple):
    """Strictly increasing non-negative integers a0 < ... < ar."""

    def __new__(cls, orders):
        orders = tuple(int(a) for a in orders)
        if not orders:
            raise InvalidSequence("empty vanishing sequence")
        if orders[0] < 0 or any(x >= y for x, y in zip(orders, orders[1:])):
            raise InvalidSequence(f"not strictly increasing and non-negative: {orders}")
        return super().__new__(cls, orders)

    @property
    def r(self) -> int:
        return len(self) - 1

    @property
    def weight(self) -> int:
        return sum(a - i for i, a in enumerate(self))

    def is_generic(self) -> bool:
        return self.weight == 0

    def check(self, r: int, d: int) -> "VanishingSequence":
        if len(self) != r + 1:
            raise InvalidSequence(f"{tuple(self)} has length {len(self)}, expected {r + 1}")
        if self[-1] > d:
            raise InvalidSequence(f"{tuple(self)} exceeds degree {d}")
        return self

    def complementary(self, d: int) -> "VanishingSequence":
        return VanishingSequence(d - a for a in reversed(self))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def generic_sequence(r: int) -> VanishingSequence:
    return VanishingSequence(range(r + 1))


def full_weight(r: int, d: int) -> int:
    return (r + 1) * (d - r)


@dataclass(frozen=True)
class RamificationProfile:
    """Multiset of non-generic vanishing sequences for a g^r_d on P^1.

    ``points`` optionally records, per geometric point class, the defining
    data found by :func:`ramification_profile`; it does not take part in
    equality.
    """

    r: int
    d: int
    sequences: tuple
    points: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.r < 0 or self.d < self.r:
            raise InvalidSequence(f"need 0 <= r <= d, got r={self.r}, d={self.d}")
        seqs = []
        for s in self.sequences:
            s = VanishingSequence(s).check(self.r, self.d)
            if s.is_generic():
                raise InvalidSequence(f"generic sequence {s!r} is not a ramification point")
            seqs.append(s)
        object.__setattr__(self, "sequences", tuple(sorted(seqs)))

    @classmethod
    def from_counts(cls, r, d, counts) -> "RamificationProfile":
        seqs = []
        for s, n in counts.items():
            seqs.extend([s] * n)
        return cls(r, d, tuple(seqs))

    @property
    def size(self) -> int:
        """|B|, the number of ramification points."""
        return len(self.sequences)

    @property
    def total_weight(self) -> int:
        return sum(s.weight for s in self.sequences)

    def is_complete(self) -> bool:
        return self.total_weight == full_weight(self.r, self.d)

    def require_complete(self) -> "RamificationProfile":
        n = full_weight(self.r, self.d)
        if self.total_weight != n:
            raise WeightMismatch(
                f"profile weight {self.total_weight} != (r+1)(d-r) = {n} for r={self.r}, d={self.d}"
            )
        return self

    def counts(self) -> Counter:
        return Counter(self.sequences)

    def distinct(self) -> list:
        return sorted(set(self.sequences))

    def weights(self) -> list[int]:
        return [s.weight for s in self.sequences]

    def to_text(self) -> str:
        parts = []
        for s in sorted(self.counts(), reverse=True):
            n = self.counts()[s]
            parts.append(repr(s) if n == 1 else f"{s!r}x{n}")
        return ",".join(parts)

    def to_json(self) -> dict:
        return {"r": self.r, "d": self.d, "points": [list(s) for s in self.sequences]}

    def __str__(self):
        return "{" + self.to_text() + "}"


# -- binary forms and points ------------------------------------------------


@dataclass(frozen=True)
class BinaryForm:
    d: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(normalize(c) for c in self.coeffs)
        if len(coeffs) != self.d + 1:
            raise ValueError(f"degree {self.d} form needs {self.d + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def monomial(cls, d: int, i: int, c: Scalar = 1) -> "BinaryForm":
        """c * v1**(d-i) * v2**i."""
        coeffs = [0] * (d + 1)
        coeffs[i] = c
        return cls(d, tuple(coeffs))

    @classmethod
    def from_affine(cls, f, d: int) -> "BinaryForm":
        """Homogenize f(t), t = v1/v2, to degree d."""
        f = upoly.trim(f)
        if upoly.degree(f) > d:
            raise ValueError("affine polynomial exceeds the target degree")
        coeffs = [0] * (d + 1)
        for k, c in enumerate(f):
            coeffs[d - k] = c
        return cls(d, tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def affine(self):
        """f(t) = F(t, 1)."""
        return upoly.trim([self.coeffs[self.d - k] for k in range(self.d + 1)])

    def affine_at_infinity_chart(self):
        """g(s) = F(1, s)."""
        return upoly.trim(list(self.coeffs))

    def order_at_infinity(self) -> int:
        """Order of vanishing at [1:0], i.e. the power of v2 dividing F."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero form vanishes to every order")

    def transform(self, a, b, c, e) -> "BinaryForm":
        """F(a*v1 + b*v2, c*v1 + e*v2)."""
        d = self.d
        out = [0] * (d + 1)
        # index along each expansion = power of v2
        left = [[1]]
        right = [[1]]
        for k in range(d):
            left.append(upoly.mul(left[-1], [a, b]))
            right.append(upoly.mul(right[-1], [c, e]))
        for i, coef in enumerate(self.coeffs):
            if not coef:
                continue
            prod = upoly.mul(left[d - i], right[i])
            for j, x in enumerate(prod):
                out[j] += coef * x
        return BinaryForm(d, tuple(out))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.d != other.d:
            raise ValueError("degree mismatch")
        return BinaryForm(self.d, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "BinaryForm":
        return BinaryForm(self.d, tuple(c * x for x in self.coeffs))

    def multiplicity_at(self, p: "ProjPoint") -> int:
        """Largest k with (p2*v1 - p1*v2)**k dividing F, by repeated division."""
        if self.is_zero():
            raise ValueError("zero form")
        p1, p2 = p.coords
        if p2 == 0:
            return self.order_at_infinity()
        # in the chart v2 = 1, the root is t = p1/p2; degree drop counts [1:0]
        f = self.affine()
        root = Fraction(p1) / p2
        k = 0
        while True:
            q, r = upoly.divmod_(f, [-root, 1])
            if r:
                return k
            f, k = q, k + 1

    def to_poly(self) -> Poly:
        ctx = ("v1", "v2")
        return Poly(ctx, {(self.d - i, i): c for i, c in enumerate(self.coeffs) if c})

    def to_text(self) -> str:
        return self.to_poly().to_text()

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class ProjPoint:
    """A rational point [p1:p2], normalized so the first nonzero entry is 1."""

    coords: tuple

    def __init__(self, p1, p2):
        p1, p2 = Fraction(p1), Fraction(p2)
        if p1 == 0 and p2 == 0:
            raise ValueError("[0:0] is not a point")
        if p1 != 0:
            p1, p2 = Fraction(1), p2 / p1
        else:
            p2 = Fraction(1)
        object.__setattr__(self, "coords", (normalize(p1), normalize(p2)))

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls(1, 0)

    @classmethod
    def affine(cls, t) -> "ProjPoint":
        """The point with chart coordinate t = v1/v2, i.e. [t:1]."""
        return cls(t, 1)

    def chart_change(self):
        """(a, b, c, e) with (v1, v2) = (a*u1 + b*u2, c*u1 + e*u2) sending [1:0] to self."""
        p1, p2 = self.coords
        q1, q2 = (0, 1) if p1 != 0 else (1, 0)
        return p1, q1, p2, q2

    def __repr__(self):
        return f"[{self.coords[0]}:{self.coords[1]}]"


@dataclass(frozen=True)
class AlgebraicPointClass:
    """The Galois-stable set of roots of a square-free ``f`` in one chart.

    ``chart="v2"`` means roots theta stand for points [theta:1];
    ``chart="v1"`` means roots stand for points [1:theta].
    """

    f: tuple
    chart: str = "v2"

    def __post_init__(self):
        f = tuple(upoly.monic(upoly.trim(self.f)))
        if len(f) < 2:
            raise ValueError("point class needs a nonconstant polynomial")
        if not upoly.is_squarefree(list(f)):
            raise ValueError(f"defining polynomial {list(f)} is not square-free")
        if self.chart not in ("v1", "v2"):
            raise ValueError("chart must be 'v1' or 'v2'")
        object.__setattr__(self, "f", f)

    @classmethod
    def infinity(cls) -> "AlgebraicPointClass":
        return cls((0, 1), "v1")

    @property
    def degree(self) -> int:
        return len(self.f) - 1

    def to_text(self) -> str:
        var = "t" if self.chart == "v2" else "s"
        body = Poly(("t",), {(k,): c for k, c in enumerate(self.f) if c}).to_text()
        return body.replace("t", var) + (" (t = v1/v2)" if self.chart == "v2" else " (s = v2/v1)")


# -- linear series ---------------------------------------------------------


def _rank_and_pivots(rows):
    """Row-reduce a rational matrix; return the pivot columns left to right."""
    m = [list(map(Fraction, row)) for row in rows]
    pivots = []
    top = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        inv = 1 / m[top][col]
        m[top] = [x * inv for x in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return pivots, m[:top]


@dataclass(frozen=True)
class LinearSeries:
    r: int
    d: int
    basis: tuple

    def __post_init__(self):
        basis = tuple(
            f if isinstance(f, BinaryForm) else BinaryForm(self.d, tuple(f)) for f in self.basis
        )
        if len(basis) != self.r + 1:
            raise ValueError(f"rank {self.r} series needs {self.r + 1} forms, got {len(basis)}")
        if any(f.d != self.d for f in basis):
            raise ValueError("basis forms must all have degree d")
        if self.r + 1 > self.d + 1:
            raise DegenerateBasis("r + 1 exceeds dim Sym^d = d + 1")
        object.__setattr__(self, "basis", basis)
        pivots, _ = _rank_and_pivots([f.coeffs for f in basis])
        if len(pivots) < self.r + 1:
            raise DegenerateBasis(f"basis has rank {len(pivots)} < {self.r + 1}")

    def transform(self, a, b, c, e) -> "LinearSeries":
        return LinearSeries(self.r, self.d, tuple(f.transform(a, b, c, e) for f in self.basis))

    def change_basis(self, matrix) -> "LinearSeries":
        """New basis element k = sum_j matrix[k][j] * basis[j]."""
        new = []
        for row in matrix:
            acc = [0] * (self.d + 1)
            for c, f in zip(row, self.basis):
                for i, x in enumerate(f.coeffs):
                    acc[i] += c * x
            new.append(BinaryForm(self.d, tuple(acc)))
        return LinearSeries(self.r, self.d, tuple(new))

    def to_json(self) -> dict:
        from .polycore import format_rational

        return {
            "r": self.r,
            "d": self.d,
            "basis": [[format_rational(c) for c in f.coeffs] for f in self.basis],
        }


# -- vanishing sequences ---------------------------------------------------


def vanishing_sequence(S: LinearSeries, p: ProjPoint) -> VanishingSequence:
    """Vanishing orders of S at a rational point.

    Moves p to [1:0]; then the columns of the coefficient matrix are ordered
    by ascending power of the local parameter and the pivot columns of the
    echelon form are the attainable orders.
    """
    moved = [f.transform(*p.chart_change()) for f in S.basis]
    pivots, _ = _rank_and_pivots([f.coeffs for f in moved])
    if len(pivots) < S.r + 1:
        raise DegenerateBasis("basis is degenerate")
    return VanishingSequence(pivots)


class _Split(Exception):
    def __init__(self, factor):
        self.factor = factor


def _reduce_mod(x, f):
    return upoly.rem(x, f) if x else []


def _taylor_matrix(S: LinearSeries, chart: str):
    # entry (j, k) = k-th Hasse derivative of the j-th form in the chart
    rows = []
    for form in S.basis:
        g = form.affine() if chart == "v2" else form.affine_at_infinity_chart()
        rows.append([upoly.hasse(g, k) for k in range(S.d + 1)])
    return rows


def _echelon_mod(rows, f, need):
    """Pivot columns of ``rows`` over Q[t]/(f); raise _Split on zero divisors."""
    m = [[_reduce_mod(x, f) for x in row] for row in rows]
    pivots = []
    top = 0
    for col in range(len(m[0])):
        piv = None
        for i in range(top, len(m)):
            x = m[i][col]
            if not x:
                continue
            g = upoly.gcd(x, f)
            if len(g) > 1:
                raise _Split(g)
            piv = i
            break
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        inv = upoly.invert(m[top][col], f)
        m[top] = [_reduce_mod(upoly.mul(x, inv), f) for x in m[top]]
        for i in range(top + 1, len(m)):
            c = m[i][col]
            if c:
                m[i] = [
                    _reduce_mod(upoly.sub(x, upoly.mul(c, y)), f) for x, y in zip(m[i], m[top])
                ]
        pivots.append(col)
        top += 1
        if top == need:
            break
    return pivots


def vanishing_sequence_algebraic(S: LinearSeries, cls: AlgebraicPointClass):
    """Vanishing sequences at the roots of a square-free polynomial.

    Works over Q[t]/(f) with dynamic splitting.  Returns a list of
    ``(factor, sequence)`` pairs whose factors multiply to ``f``; pairs with
    equal sequences are merged, so the usual answer has one entry.
    """
    rows = _taylor_matrix(S, cls.chart)
    found: dict[VanishingSequence, list] = {}
    stack = [list(cls.f)]
    while stack:
        f = stack.pop()
        try:
            pivots = _echelon_mod(rows, f, S.r + 1)
        except _Split as split:
            g = split.factor
            stack.append(g)
            stack.append(upoly.exquo(f, g))
            continue
        if len(pivots) < S.r + 1:
            raise DegenerateBasis("basis is degenerate modulo a point class")
        seq = VanishingSequence(pivots)
        found[seq] = upoly.mul(found.get(seq, [1]), f)
    return [(tuple(upoly.monic(f)), s) for s, f in sorted(found.items(), key=lambda kv: kv[0])]


# -- Wronskian ---------------------------------------------------------------


def _det_poly(matrix):
    """Determinant of a square matrix of univariate polynomials (Bareiss)."""
    n = len(matrix)
    m = [[upoly.trim(x) for x in row] for row in matrix]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = upoly.sub(upoly.mul(m[i][j], m[k][k]), upoly.mul(m[i][k], m[k][j]))
                m[i][j] = upoly.exquo(num, prev)
            m[i][k] = []
        prev = m[k][k]
    return upoly.scale(m[n - 1][n - 1], sign)


def canonical_form(F: BinaryForm) -> BinaryForm:
    """Clear denominators, divide by content, make the first nonzero entry positive."""
    vals = [Fraction(c) for c in F.coeffs]
    if not any(vals):
        raise ValueError("zero form has no canonical normalization")
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    content = 0
    for x in ints:
        content = gcd(content, x)
    ints = [x // content for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return BinaryForm(F.d, tuple(ints))


def wronskian(S: LinearSeries) -> BinaryForm:
    """Wronskian of S, a form of degree (r+1)(d-r), in canonical normalization."""
    n = full_weight(S.r, S.d)
    g = [f.affine() for f in S.basis]
    matrix = [[upoly.deriv(gj, k) for gj in g] for k in range(S.r + 1)]
    w = _det_poly(matrix)
    if not w:
        raise OrbitCalcError("Wronskian vanishes identically for an independent basis")
    if upoly.degree(w) > n:
        raise OrbitCalcError("Wronskian degree exceeds (r+1)(d-r)")
    return canonical_form(BinaryForm.from_affine(w, n))


# -- ramification ------------------------------------------------------------


@dataclass(frozen=True)
class RamificationPoint:
    """One Galois class of ramification points with its data."""

    point: AlgebraicPointClass
    sequence: VanishingSequence
    multiplicity: int

    @property
    def count(self) -> int:
        return self.point.degree


def ramification_points(S: LinearSeries) -> list[RamificationPoint]:
    W = wronskian(S)
    out = []
    k = W.order_at_infinity()
    if k:
        seq = vanishing_sequence(S, ProjPoint.infinity())
        out.append(RamificationPoint(AlgebraicPointClass.infinity(), seq, k))
    _, factors = upoly.sqf_list(W.affine())
    for f, m in factors:
        for g, seq in vanishing_sequence_algebraic(S, AlgebraicPointClass(tuple(f))):
            out.append(RamificationPoint(AlgebraicPointClass(g), seq, m))
    for pt in out:
        if pt.sequence.weight != pt.multiplicity:
            raise OrbitCalcError(
                f"order law violated: weight {pt.sequence.weight} vs multiplicity {pt.multiplicity}"
            )
    return out


def ramification_profile(S: LinearSeries) -> RamificationProfile:
    """Ramification profile of S; ``points`` keeps the per-class data."""
    pts = ramification_points(S)
    seqs = []
    for pt in pts:
        seqs.extend([pt.sequence] * pt.count)
    profile = RamificationProfile(S.r, S.d, tuple(seqs), points=tuple(pts))
    if not profile.is_complete():
        raise OrbitCalcError("total ramification weight differs from (r+1)(d-r)")
    return profile


# -- degenerations ---------------------------------------------------------


def _t_valuation(entries):
    return min((next(k for k, c in enumerate(e) if c) for e in entries if e), default=None)


def degenerate_at(S: LinearSeries, b: ProjPoint) -> VanishingSequence:
    """Exponents of the monomial limit of diag(1, t) applied to S at b.

    b is moved to [1:0] (via a chart change chosen independently of
    :func:`vanishing_sequence`), every form is pushed through
    ``(w1, w2) -> (w1, t*w2)``, and the row space over Q(t) is reduced until
    the t -> 0 leading vectors are independent.  Those vectors must span a
    coordinate subspace; its monomials are returned.
    """
    p1, p2 = b.coords
    # complementary vector differs from ProjPoint.chart_change on purpose
    q1, q2 = (1, 1) if p1 != p2 else (1, 0)
    if p1 * q2 - p2 * q1 == 0:
        q1, q2 = 0, 1
    moved = [f.transform(p1, q1, p2, q2) for f in S.basis]
    # entry i of row j is a polynomial in t: coefficient * t**i
    rows = []
    for f in moved:
        rows.append([upoly.trim([0] * i + [c]) for i, c in enumerate(f.coeffs)])
    n = len(rows)
    guard = 0
    while True:
        guard += 1
        if guard > 10 * (S.d + 1) ** 2 * (n + 1):
            raise OrbitCalcError("symbolic limit did not stabilise")
        leads = []
        for j, row in enumerate(rows):
            v = _t_valuation(row)
            if v is None:
                raise DegenerateBasis("basis is degenerate")
            rows[j] = [upoly.trim(e[v:]) if e else [] for e in row]
            leads.append([e[0] if e else 0 for e in rows[j]])
        dep = _dependency(leads)
        if dep is None:
            break
        # replace one row by the combination whose t^0 part cancels, then divide by t
        j = max(k for k, c in enumerate(dep) if c)
        combo = [[] for _ in range(len(rows[0]))]
        for k, c in enumerate(dep):
            if c:
                combo = [upoly.add(x, upoly.scale(y, c)) for x, y in zip(combo, rows[k])]
        rows[j] = combo
    pivots, reduced = _rank_and_pivots(leads)
    for row in reduced:
        support = [i for i, x in enumerate(row) if x]
        if len(support) != 1:
            raise OrbitCalcError("limit is not spanned by monomials")
    return VanishingSequence(sorted(pivots))


def _dependency(vectors):
    """A nontrivial rational relation among vectors, or None."""
    n = len(vectors)
    if not n:
        return None
    width = len(vectors[0])
    # augment with identity to track the combination
    m = [list(map(Fraction, v)) + [Fraction(int(i == k)) for k in range(n)] for i, v in enumerate(vectors)]
    top = 0
    for col in range(width):
        piv = next((i for i in range(top, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        for i in range(n):
            if i != top and m[i][col] != 0:
                f = m[i][col] / m[top][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[top])]
        top += 1
    for i in range(top, n):
        if not any(m[i][:width]):
            return [normalize(x) for x in m[i][width:]]
    return None


def boundary_orbits(S: LinearSeries) -> list[tuple[VanishingSequence, int]]:
    """Monomial representatives of the boundary orbits with their dimensions."""
    profile = ramification_profile(S)
    out = [(generic_sequence(S.r), 1)]
    out.extend((s, 2) for s in profile.distinct())
    return out


def monomial_series(r: int, d: int, seq) -> LinearSeries:
    """<w1^(d-a0) w2^a0, ...>, the orbit representative for a vanishing sequence."""
    seq = VanishingSequence(seq).check(r, d)
    return LinearSeries(r, d, tuple(BinaryForm.monomial(d, a) for a in seq))
