"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``. Coefficients may be
Fractions or finite field elements; the helpers only use field operations.
"""

from __future__ import annotations

from fractions import Fraction


def inv(x):
    """Multiplicative inverse that never degrades an int to a float."""
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f) -> int:
    return len(f) - 1  # -1 for zero


def add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def sub(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def scale(f, c):
    return trim([c * x for x in f])


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(f, g):
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = trim(f)
    ginv = inv(g[-1])
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = f[-1] * ginv
        k = len(f) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = f[k + i] - c * b
        f.pop()
        f = trim(f)
    return trim(q), f


def rem(f, g):
    return divmod_(f, g)[1]


def exact_div(f, g):
    q, r = divmod_(f, g)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(f):
    if not f:
        return []
    li = inv(f[-1])
    return [x * li for x in f]


def gcd(f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def xgcd(f, g):
    """Return (d, s, t) with s*f + t*g = d, d monic."""
    r0, r1 = trim(f), trim(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    li = inv(r0[-1])
    return scale(r0, li), scale(s0, li), scale(t0, li)


def inverse_mod(f, m):
    d, s, _ = xgcd(f, m)
    if len(d) != 1:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return rem(s, m)


def deriv(f):
    return trim([i * f[i] for i in range(1, len(f))])


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def squarefree_decomposition(f):
    """Yun's algorithm: list of (s_i, i) with f = lc * prod s_i^i, s_i squarefree and coprime.

    Valid in characteristic 0 and, for degree below the characteristic, over F_q.
    """
    f = trim(f)
    if not f:
        raise ValueError("squarefree decomposition of zero")
    if len(f) == 1:
        return []
    out = []
    f = monic(f)
    a0 = gcd(f, deriv(f))
    b = exact_div(f, a0)
    c = exact_div(deriv(f), a0)
    d = sub(c, deriv(b))
    i = 1
    while len(b) > 1:
        a = gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = exact_div(b, a)
        c = exact_div(d, a) if d else []
        d = sub(c, deriv(b))
        i += 1
    return out


def squarefree_part(f):
    f = trim(f)
    if not f:
        raise ValueError("squarefree part of zero")
    return exact_div(monic(f), gcd(f, deriv(f)))


def powmod(base, e: int, m):
    result = [base[0] * 0 + 1] if base else [1]
    result = rem(result, m)
    b = rem(base, m)
    while e:
        if e & 1:
            result = rem(mul(result, b), m)
        b = rem(mul(b, b), m)
        e >>= 1
    return result


def to_str(f, var: str = "t") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        parts.append(f"({c})" + ("*" + mono if mono else ""))
    return " + ".join(parts)
