"""Dense univariate polynomials over Q as coefficient lists.

``f[i]`` is the coefficient of ``t**i``; the zero polynomial is ``[]``.
All functions return freshly trimmed lists and never mutate their inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd as igcd

from .polycore import normalize


def trim(f):
    f = [normalize(c) for c in f]
    while f and not f[-1]:
        f.pop()
    return f


def degree(f) -> int:
    return len(f) - 1


def add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def sub(f, g):
    return add(f, [-c for c in g])


def scale(f, c):
    return trim([c * x for x in f])


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def pow_(f, n: int):
    out = [1]
    for _ in range(n):
        out = mul(out, f)
    return out


def divmod_(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = trim(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    lead = Fraction(g[-1])
    rem = list(f)
    for k in range(len(f) - len(g), -1, -1):
        c = rem[k + len(g) - 1] / lead
        if c:
            q[k] = c
            for j, b in enumerate(g):
                rem[k + j] -= c * b
    return trim(q), trim(rem[: len(g) - 1])


def rem(f, g):
    return divmod_(f, g)[1]


def exquo(f, g):
    q, r = divmod_(f, g)
    if r:
        raise ArithmeticError("polynomial not divisible")
    return q


def monic(f):
    if not f:
        return []
    lead = Fraction(f[-1])
    return trim([c / lead for c in f])


def gcd(f, g):
    """Monic greatest common divisor (``[]`` only when both are zero)."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def gcdex(f, g):
    """Return ``(s, h)`` with ``s*f = h (mod g)`` and ``h = gcd(f, g)``."""
    r0, r1 = trim(f), trim(g)
    s0, s1 = [1], []
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if not r0:
        return [], []
    lead = Fraction(r0[-1])
    return scale(s0, 1 / lead), monic(r0)


def invert(f, m):
    """Inverse of ``f`` modulo ``m``; ``f`` must be a unit there."""
    s, h = gcdex(f, m)
    if h != [1]:
        raise ZeroDivisionError("not invertible modulo m")
    return rem(s, m)


def deriv(f, k: int = 1):
    out = list(f)
    for _ in range(k):
        out = [i * out[i] for i in range(1, len(out))]
    return trim(out)


def hasse(f, k: int):
    """k-th Hasse derivative, f^{(k)} / k!, computed without division."""
    return trim([comb(i, k) * f[i] for i in range(k, len(f))])


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return normalize(acc)


def compose_linear(f, a, b):
    """f(a*t + b)."""
    out = []
    for c in reversed(f):
        out = add(mul(out, [b, a]), [c])
    return out


def sqf_list(f):
    """Yun's square-free decomposition.

    Returns ``(lc, [(g, m), ...])`` with monic square-free pairwise coprime
    ``g`` and ``f = lc * prod(g**m)``.  Factors equal to 1 are omitted.
    """
    f = trim(f)
    if not f:
        raise ValueError("square-free decomposition of zero")
    lc = f[-1]
    if len(f) == 1:
        return lc, []
    f = monic(f)
    out = []
    a = gcd(f, deriv(f))
    b = exquo(f, a)
    c = exquo(deriv(f), a)
    d = sub(c, deriv(b))
    m = 1
    while len(b) > 1:
        g = gcd(b, d)
        if len(g) > 1:
            out.append((g, m))
        b = exquo(b, g)
        c = exquo(d, g)
        d = sub(c, deriv(b))
        m += 1
    return lc, out


def is_squarefree(f) -> bool:
    return len(gcd(f, deriv(f))) <= 1


def primitive_integer(f):
    """Scale to coprime integer coefficients (sign unchanged)."""
    f = trim(f)
    if not f:
        return []
    den = 1
    for c in f:
        den = den * Fraction(c).denominator // igcd(den, Fraction(c).denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for x in ints:
        g = igcd(g, x)
    return [x // g for x in ints]
