"""Orbit specialisation: labelled dual trees, collisions and pre-degrees.

A labelled tree records a degenerate P^1: vertices are components, full
edges are nodes carrying one vanishing sequence per side (complementary to
each other), and dangling half-edges are the marked ramification points.
The weighted orbit class of the dangling profile equals the sum over
vertices of the classes of their local profiles; :class:`Relation` carries
such an identity and can check it exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations

from .classes import EquivariantClass, nonequivariant_class, weighted_orbit_class
from .errors import InvalidTree, NonexistentProfile, OrbitCalcError, WeightMismatch
from .schubert import SchubertClass, profile_exists
from .series import RamificationProfile, VanishingSequence, full_weight


def complementary(seq, d: int) -> VanishingSequence:
    """(d - c_r, ..., d - c_0)."""
    seq = VanishingSequence(seq)
    if seq[-1] > d:
        raise ValueError(f"{seq!r} exceeds degree {d}")
    return seq.complementary(d)


def _profile(r: int, d: int, labels) -> RamificationProfile:
    # unramified half-edges contribute nothing to the class
    return RamificationProfile(r, d, tuple(s for s in labels if not VanishingSequence(s).is_generic()))


# -- relations ---------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    """[WOrb(lhs)] = sum of coef * [WOrb(profile)] over ``rhs``."""

    r: int
    d: int
    lhs: RamificationProfile
    rhs: tuple  # ((coef, RamificationProfile), ...)

    def grouped(self) -> list[tuple[int, RamificationProfile]]:
        counts: Counter = Counter()
        order = []
        for c, p in self.rhs:
            if p not in counts:
                order.append(p)
            counts[p] += c
        return [(counts[p], p) for p in order]

    def to_text(self) -> str:
        terms = []
        for c, p in self.grouped():
            body = f"WOrb{p}"
            terms.append(body if c == 1 else f"{c}*{body}")
        return f"WOrb{self.lhs} = " + " + ".join(terms)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "lhs": [list(s) for s in self.lhs.sequences],
            "rhs": [{"coef": c, "points": [list(s) for s in p.sequences]} for c, p in self.grouped()],
        }

    def lhs_class(self) -> EquivariantClass:
        return weighted_orbit_class(self.lhs)

    def rhs_class(self) -> EquivariantClass:
        total = None
        for c, p in self.grouped():
            term = weighted_orbit_class(p).scale(c)
            total = term if total is None else total + term
        return total

    def verify(self) -> "Verification":
        left, right = self.lhs_class(), self.rhs_class()
        diff = left - right
        return Verification(self, diff.is_zero(), diff)

    def schubert_sides(self) -> tuple[SchubertClass, list[tuple[int, SchubertClass]]]:
        return nonequivariant_class(self.lhs_class()), [
            (c, nonequivariant_class(weighted_orbit_class(p))) for c, p in self.grouped()
        ]


@dataclass(frozen=True)
class Verification:
    relation: Relation
    ok: bool
    difference: EquivariantClass = field(repr=False)

    def to_json(self) -> dict:
        out = {"relation": self.relation.to_json(), "result": "PASS" if self.ok else "FAIL"}
        if not self.ok:
            out["difference"] = self.difference.to_text()
        return out


# -- labelled trees ------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    label_u: VanishingSequence
    label_v: VanishingSequence


@dataclass(frozen=True)
class LabelledTree:
    r: int
    d: int
    vertices: tuple
    edges: tuple  # (Edge, ...)
    dangling: tuple  # ((vertex, VanishingSequence), ...)

    @classmethod
    def build(cls, r, d, vertices, edges, dangling) -> "LabelledTree":
        """Edges are (u, v, label_u) or (u, v, label_u, label_v); missing label_v is the complement."""
        es = []
        for e in edges:
            u, v, lu = e[0], e[1], VanishingSequence(e[2])
            lv = VanishingSequence(e[3]) if len(e) > 3 and e[3] is not None else lu.complementary(d)
            es.append(Edge(u, v, lu, lv))
        dg = tuple((vx, VanishingSequence(lab)) for vx, lab in dangling)
        return cls(r, d, tuple(vertices), tuple(es), dg)

    def half_edges(self, vertex) -> list[VanishingSequence]:
        out = [lab for vx, lab in self.dangling if vx == vertex]
        for e in self.edges:
            if e.u == vertex:
                out.append(e.label_u)
            if e.v == vertex:
                out.append(e.label_v)
        return out

    def dangling_labels(self) -> list[VanishingSequence]:
        return [lab for _, lab in self.dangling]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "d": self.d,
            "vertices": list(self.vertices),
            "edges": [
                {"u": e.u, "v": e.v, "label_u": list(e.label_u), "label_v": list(e.label_v)}
                for e in self.edges
            ],
            "dangling": [{"vertex": vx, "label": list(lab)} for vx, lab in self.dangling],
        }


@dataclass
class TreeReport:
    ok: bool = True
    failures: list = field(default_factory=list)

    def fail(self, kind: str, detail: str):
        self.ok = False
        self.failures.append((kind, detail))

    def kinds(self) -> set:
        return {k for k, _ in self.failures}

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(f"{k}: {msg}" for k, msg in self.failures)


def _is_tree(vertices, edges) -> tuple[bool, str]:
    vs = set(vertices)
    if len(vs) != len(vertices):
        return False, "duplicate vertex names"
    for a, b in edges:
        if a not in vs or b not in vs:
            return False, f"edge {a}-{b} uses an unknown vertex"
        if a == b:
            return False, f"loop at {a}"
    if len(edges) != len(vs) - 1:
        return False, f"{len(edges)} edges on {len(vs)} vertices"
    parent = {v: v for v in vs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False, f"cycle through {a}-{b}"
        parent[ra] = rb
    return True, ""


def validate_tree(t: LabelledTree, check_existence: bool = True) -> TreeReport:
    report = TreeReport()
    r, d, n = t.r, t.d, full_weight(t.r, t.d)
    ok, why = _is_tree(t.vertices, [(e.u, e.v) for e in t.edges])
    if not ok:
        report.fail("tree", why)
    for vx, lab in t.dangling:
        if vx not in t.vertices:
            report.fail("tree", f"dangling label on unknown vertex {vx}")
    labels = [lab for _, lab in t.dangling] + [x for e in t.edges for x in (e.label_u, e.label_v)]
    for lab in labels:
        if len(lab) != r + 1 or lab[-1] > d:
            report.fail("label", f"{lab!r} is not a vanishing sequence for r={r}, d={d}")
    if not report.ok:
        return report
    for e in t.edges:
        if any(a + b != d for a, b in zip(e.label_u, reversed(e.label_v))):
            report.fail("complementarity", f"edge {e.u}-{e.v}: {e.label_u!r} and {e.label_v!r}")
    for vx in t.vertices:
        w = sum(lab.weight for lab in t.half_edges(vx))
        if w != n:
            report.fail("weight", f"vertex {vx} has weight {w}, expected {n}")
    if report.ok and check_existence:
        for vx in t.vertices:
            prof = _profile(r, d, t.half_edges(vx))
            if not profile_exists(prof):
                report.fail("existence", f"no g^{r}_{d} with profile {prof} at vertex {vx}")
    return report


def decompose(t: LabelledTree) -> Relation:
    """Relation: dangling profile = sum of the vertex profiles."""
    report = validate_tree(t)
    if not report.ok:
        raise InvalidTree(str(report))
    lhs = _profile(t.r, t.d, t.dangling_labels())
    rhs = tuple((1, _profile(t.r, t.d, t.half_edges(vx))) for vx in t.vertices)
    return Relation(t.r, t.d, lhs, rhs)


# -- collisions ------------------------------------------------------------------


@dataclass(frozen=True)
class CollisionSpec:
    """Points with sequences ``colliding`` meet at a point with limit sequence ``c``."""

    r: int
    d: int
    colliding: tuple
    remaining: tuple
    c: VanishingSequence

    def __post_init__(self):
        object.__setattr__(self, "colliding", tuple(VanishingSequence(s) for s in self.colliding))
        object.__setattr__(self, "remaining", tuple(VanishingSequence(s) for s in self.remaining))
        object.__setattr__(self, "c", VanishingSequence(self.c).check(self.r, self.d))

    @property
    def c_prime(self) -> VanishingSequence:
        return self.c.complementary(self.d)

    def check(self):
        n = full_weight(self.r, self.d)
        wa = sum(s.weight for s in self.colliding)
        wb = sum(s.weight for s in self.remaining)
        if self.c_prime.weight + wa != n:
            raise WeightMismatch(f"weight(c') + weight(A) = {self.c_prime.weight + wa} != {n}")
        if self.c.weight + wb != n:
            raise WeightMismatch(f"weight(c) + weight(B) = {self.c.weight + wb} != {n}")


def collide(spec: CollisionSpec) -> Relation:
    """WOrb(A + B) = WOrb(A + {c'}) + WOrb(B + {c})."""
    spec.check()
    r, d = spec.r, spec.d
    lhs = _profile(r, d, spec.colliding + spec.remaining)
    left = _profile(r, d, spec.colliding + (spec.c_prime,))
    right = _profile(r, d, spec.remaining + (spec.c,))
    for side in (left, right):
        if not profile_exists(side):
            raise NonexistentProfile(f"no g^{r}_{d} with profile {side}")
    return Relation(r, d, lhs, ((1, left), (1, right)))


def substitute_relation(outer: Relation, target: RamificationProfile, inner: Relation) -> Relation:
    """Replace one rhs occurrence of ``target`` in ``outer`` by the rhs of ``inner``."""
    if inner.lhs != target:
        raise OrbitCalcError("inner relation does not expand the target profile")
    rhs = list(outer.rhs)
    for k, (c, p) in enumerate(rhs):
        if p == target:
            new = [(c * ci, pi) for ci, pi in inner.rhs]
            return Relation(outer.r, outer.d, outer.lhs, tuple(rhs[:k] + new + rhs[k + 1 :]))
    raise OrbitCalcError(f"{target} does not occur on the right-hand side")


# -- pre-degrees -------------------------------------------------------------


def predegree(m) -> int:
    """N^3 - 3N sum m_i^2 + 2 sum m_i^3 for positive multiplicities m."""
    m = [int(x) for x in m]
    if any(x <= 0 for x in m):
        raise ValueError("multiplicities must be positive")
    n = sum(m)
    return n ** 3 - 3 * n * sum(x * x for x in m) + 2 * sum(x ** 3 for x in m)


def predegree_brute_force(m) -> int:
    """Sum of m_i m_j m_k over ordered triples of distinct indices."""
    return sum(m[i] * m[j] * m[k] for i, j, k in permutations(range(len(m)), 3))


@dataclass(frozen=True)
class WeightTree:
    """A tree whose half-edges carry integer weights instead of sequences."""

    n: int
    vertices: tuple
    edges: tuple  # ((u, v, weight_u, weight_v), ...)
    dangling: tuple  # ((vertex, weight), ...)

    @classmethod
    def from_labelled(cls, t: LabelledTree) -> "WeightTree":
        return cls(
            full_weight(t.r, t.d),
            t.vertices,
            tuple((e.u, e.v, e.label_u.weight, e.label_v.weight) for e in t.edges),
            tuple((vx, lab.weight) for vx, lab in t.dangling),
        )

    def weights_at(self, vertex) -> list[int]:
        out = [w for vx, w in self.dangling if vx == vertex]
        for u, v, wu, wv in self.edges:
            if u == vertex:
                out.append(wu)
            if v == vertex:
                out.append(wv)
        return out


def _p(weights) -> int:
    return predegree([w for w in weights if w > 0])


def contraction_additive(t: WeightTree) -> bool:
    """Check pre-degree additivity for every edge and the full contraction.

    Zero weights (unramified half-edges) are dropped before evaluating.
    """
    ok, why = _is_tree(t.vertices, [(u, v) for u, v, _, _ in t.edges])
    if not ok:
        raise InvalidTree(why)
    for u, v, wu, wv in t.edges:
        if wu + wv != t.n:
            raise InvalidTree(f"edge {u}-{v} weights sum to {wu + wv}, expected {t.n}")
    for vx in t.vertices:
        if sum(t.weights_at(vx)) != t.n:
            raise InvalidTree(f"vertex {vx} weights do not sum to {t.n}")

    # each edge on its own: contracting it merges the two vertex multisets
    for k, (u, v, wu, wv) in enumerate(t.edges):
        rest_u = list(t.weights_at(u))
        rest_u.remove(wu)
        rest_v = list(t.weights_at(v))
        rest_v.remove(wv)
        if _p(t.weights_at(u)) + _p(t.weights_at(v)) != _p(rest_u + rest_v):
            return False

    # contract one edge at a time; the vertex sum must stay constant
    groups = {vx: list(t.weights_at(vx)) for vx in t.vertices}
    owner = {vx: vx for vx in t.vertices}
    total = sum(_p(ws) for ws in groups.values())
    for u, v, wu, wv in t.edges:
        a, b = owner[u], owner[v]
        merged = groups.pop(a) + groups.pop(b)
        merged.remove(wu)
        merged.remove(wv)
        groups[a] = merged
        for vx, o in owner.items():
            if o == b:
                owner[vx] = a
        if sum(_p(ws) for ws in groups.values()) != total:
            return False
    (final,) = groups.values()
    return sorted(final) == sorted(w for _, w in t.dangling) and total == _p(final)
