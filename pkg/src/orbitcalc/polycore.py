"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` is an immutable map from exponent tuples to nonzero rational
coefficients, attached to an ordered tuple of variable names (its context).
Coefficients are kept as ``int`` when integral and as
:class:`fractions.Fraction` otherwise, so ``==`` on term maps is exact.

Monomials are ordered lexicographically on the exponent tuple, first variable
most significant; serialization lists terms from the largest monomial down.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import ContextMismatch, NotDivisible, ParseError

Scalar = Union[int, Fraction]


def normalize(c) -> Scalar:
    """Return ``c`` as an int when integral, else as a reduced Fraction."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return normalize(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return parse_rational(c)
    raise TypeError(f"not an exact rational: {c!r}")


def parse_rational(text: str) -> Scalar:
    """Parse ``"7"``, ``"-3/4"`` style strings. Floats are rejected."""
    s = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ParseError(f"not an exact rational: {text!r}")
    try:
        return normalize(Fraction(s))
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {text!r}") from exc


def format_rational(c: Scalar) -> str:
    c = normalize(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def equivariant_context(r: int) -> tuple[str, ...]:
    """Variables mu0..mu_r, w1, w2 of the ambient ring."""
    return tuple(f"mu{j}" for j in range(r + 1)) + ("w1", "w2")


def root_context(k: int, name: str = "x") -> tuple[str, ...]:
    return tuple(f"{name}{j}" for j in range(k))


class Poly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Iterable[str], terms: Mapping[tuple, Scalar] | None = None):
        ctx = tuple(ctx)
        n = len(ctx)
        clean: dict[tuple, Scalar] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for context {ctx}")
                c = normalize(c)
                if c:
                    clean[exps] = normalize(clean.get(exps, 0) + c)
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, ctx: tuple, terms: dict) -> "Poly":
        # terms already canonical
        p = object.__new__(cls)
        object.__setattr__(p, "ctx", ctx)
        object.__setattr__(p, "terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ctx) -> "Poly":
        return cls._raw(tuple(ctx), {})

    @classmethod
    def const(cls, ctx, c) -> "Poly":
        ctx = tuple(ctx)
        c = normalize(c)
        return cls._raw(ctx, {(0,) * len(ctx): c} if c else {})

    @classmethod
    def var(cls, ctx, name: str, power: int = 1) -> "Poly":
        ctx = tuple(ctx)
        e = [0] * len(ctx)
        e[ctx.index(name)] = power
        return cls._raw(ctx, {tuple(e): 1})

    @classmethod
    def linear(cls, ctx, coeffs: Mapping[str, Scalar], const: Scalar = 0) -> "Poly":
        ctx = tuple(ctx)
        terms: dict[tuple, Scalar] = {}
        for name, c in coeffs.items():
            e = [0] * len(ctx)
            e[ctx.index(name)] = 1
            terms[tuple(e)] = c
        if const:
            terms[(0,) * len(ctx)] = const
        return cls(ctx, terms)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(self.ctx, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def coefficient(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self) -> tuple[tuple, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def degree_in(self, name: str) -> int:
        i = self.ctx.index(name)
        return max((e[i] for e in self.terms), default=-1)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = normalize(s)
            else:
                out.pop(e, None)
        return Poly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict[tuple, Scalar] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Poly._raw(self.ctx, {e: normalize(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = normalize(c)
        if not c:
            return Poly.zero(self.ctx)
        return Poly._raw(self.ctx, {e: normalize(v * c) for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = Poly.const(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def permute(self, mapping: Mapping[str, str]) -> "Poly":
        """Rename variables by a permutation of the context."""
        idx = {self.ctx.index(a): self.ctx.index(b) for a, b in mapping.items()}
        n = len(self.ctx)
        perm = [idx.get(i, i) for i in range(n)]
        if sorted(perm) != list(range(n)):
            raise ValueError("mapping is not a permutation of the context")
        out = {}
        for e, c in self.terms.items():
            f = [0] * n
            for i, x in enumerate(e):
                f[perm[i]] = x
            out[tuple(f)] = c
        return Poly._raw(self.ctx, out)

    # -- text form --------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.ctx, e) if k
            )
            mag = format_rational(abs(c))
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Poly({self.to_text()!r}, ctx={self.ctx})"

    @classmethod
    def parse(cls, text: str, ctx) -> "Poly":
        ctx = tuple(ctx)
        s = text.strip()
        if s == "0":
            return cls.zero(ctx)
        if not s:
            raise ParseError("empty polynomial")
        pos = {name: i for i, name in enumerate(ctx)}
        tokens = re.findall(r"\s*([+-]?)\s*([^+\-\s][^+\-]*)", s)
        if "".join(sign + body for sign, body in tokens).replace(" ", "") != s.replace(" ", ""):
            raise ParseError(f"cannot parse polynomial {text!r}")
        terms: dict[tuple, Scalar] = {}
        for sign, body in tokens:
            coef: Scalar = 1
            e = [0] * len(ctx)
            for factor in body.strip().split("*"):
                factor = factor.strip()
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coef = normalize(coef * parse_rational(factor))
                    continue
                m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(\d+))?", factor)
                if not m or m.group(1) not in pos:
                    raise ParseError(f"unknown factor {factor!r} in {text!r}")
                e[pos[m.group(1)]] += int(m.group(2) or 1)
            if sign == "-":
                coef = -coef
            key = tuple(e)
            terms[key] = normalize(terms.get(key, 0) + coef)
        return cls(ctx, terms)


# -- module-level operations ----------------------------------------------


def arith(a: Poly, b: Poly, kind: str) -> Poly:
    """Exact add/sub/mul of two polynomials over the same context."""
    a._check(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def _is_omega_difference(den: Poly) -> bool:
    if "w1" not in den.ctx or "w2" not in den.ctx or len(den.terms) != 2:
        return False
    return den == Poly.var(den.ctx, "w1") - Poly.var(den.ctx, "w2")


def _divide_by_omega_difference(num: Poly) -> Poly:
    # Synthetic division by (w1 - w2) inside each block of terms sharing the
    # non-omega exponents and the combined omega degree.
    i1, i2 = num.ctx.index("w1"), num.ctx.index("w2")
    blocks: dict[tuple, dict[int, Scalar]] = {}
    for e, c in num.terms.items():
        rest = list(e)
        a, b = rest[i1], rest[i2]
        rest[i1] = a + b
        rest[i2] = 0
        blocks.setdefault(tuple(rest), {})[a] = c
    out: dict[tuple, Scalar] = {}
    for key, coeffs in blocks.items():
        s = key[i1]
        if s == 0:
            raise NotDivisible("remainder has terms free of w1, w2")
        carry: Scalar = 0
        for a in range(s, 0, -1):
            carry = carry + coeffs.get(a, 0)
            if carry:
                e = list(key)
                e[i1] = a - 1
                e[i2] = s - a
                out[tuple(e)] = normalize(carry)
        if carry + coeffs.get(0, 0) != 0:
            raise NotDivisible("nonzero remainder on division by (w1 - w2)")
    return Poly._raw(num.ctx, out)


def _neg_key(e):
    return tuple(-x for x in e)


def exact_quotient(num: Poly, den: Poly) -> Poly:
    """Return ``q`` with ``q * den == num``; raise NotDivisible otherwise."""
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return Poly.zero(num.ctx)
    if _is_omega_difference(den):
        return _divide_by_omega_difference(num)
    lead_e, lead_c = den.leading_term()
    rem = dict(num.terms)
    heap = [_neg_key(e) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple, Scalar] = {}
    while heap:
        e = tuple(-x for x in heapq.heappop(heap))
        c = rem.get(e)
        if not c:
            continue
        if any(x < y for x, y in zip(e, lead_e)):
            raise NotDivisible(f"{num} is not divisible by {den}")
        qe = tuple(x - y for x, y in zip(e, lead_e))
        qc = normalize(Fraction(c) / lead_c)
        quot[qe] = qc
        for de, dc in den.terms.items():
            t = tuple(x + y for x, y in zip(qe, de))
            v = rem.get(t, 0) - qc * dc
            if v:
                if t not in rem or not rem[t]:
                    heapq.heappush(heap, _neg_key(t))
                rem[t] = v
            else:
                rem.pop(t, None)
    return Poly._raw(num.ctx, quot)


def substitute(p: Poly, assignment: Mapping[str, Union[Poly, Scalar]], ctx=None) -> Poly:
    """Simultaneous substitution of variables by polynomials or rationals.

    The result lives in ``ctx`` (default: the context of ``p``).  Unassigned
    variables are carried over by name and must exist in the target context.
    """
    target = tuple(ctx) if ctx is not None else p.ctx
    values: dict[int, Poly] = {}
    for name, v in assignment.items():
        i = p.ctx.index(name)
        if isinstance(v, Poly):
            if v.ctx != target:
                raise ContextMismatch(f"value for {name} lives in {v.ctx}, not {target}")
            values[i] = v
        else:
            values[i] = Poly.const(target, v)
    carry = {}
    for i, name in enumerate(p.ctx):
        if i not in values:
            if name not in target:
                raise ContextMismatch(f"variable {name} missing from target context")
            carry[i] = target.index(name)
    powers: dict[tuple[int, int], Poly] = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = values[i] if k == 1 else power(i, k - 1) * values[i]
        return powers[key]

    result: dict[tuple, Scalar] = {}
    n = len(target)
    for e, c in p.terms.items():
        base = [0] * n
        for i, j in carry.items():
            base[j] += e[i]
        term = Poly._raw(target, {tuple(base): c})
        for i in values:
            if e[i]:
                term = term * power(i, e[i])
        for te, tc in term.terms.items():
            result[te] = result.get(te, 0) + tc
    return Poly._raw(target, {e: normalize(c) for e, c in result.items() if c})


SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NEITHER = "neither"


def _generators(p: Poly, group) -> list[dict[str, str]]:
    if group in ("omega", "w"):
        return [{"w1": "w2", "w2": "w1"}]
    if group in ("mu", "mus"):
        mus = [v for v in p.ctx if v.startswith("mu")]
        return [{a: b, b: a} for a, b in zip(mus, mus[1:])]
    if group == "all":
        return [{a: b, b: a} for a, b in zip(p.ctx, p.ctx[1:])]
    # explicit list of transpositions
    return [{a: b, b: a} for a, b in group]


def symmetry_check(p: Poly, group) -> str:
    """Classify ``p`` under a group given by transposition generators.

    ``group`` is ``"omega"``, ``"mu"``, ``"all"`` or a list of name pairs.
    The zero polynomial reports symmetric.
    """
    gens = _generators(p, group)
    images = [p.permute(g) for g in gens]
    if all(q == p for q in images):
        return SYMMETRIC
    neg = -p
    if all(q == neg for q in images):
        return ANTISYMMETRIC
    return NEITHER


def is_homogeneous(p: Poly):
    """Common total degree of all terms, ``None`` if mixed, ``"zero"`` for 0."""
    if p.is_zero():
        return "zero"
    degrees = {sum(e) for e in p.terms}
    return degrees.pop() if len(degrees) == 1 else None
