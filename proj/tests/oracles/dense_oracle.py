"""Reference values computed by brute force on dense tensors.

Every tensor is a dict {(i1, ..., in): coefficient} over exact Gaussian
rationals; products are taken factor by factor from the table below and
symmetrization averages over all n! permutations. Output keys follow the
fixture format: the coefficient of a sorted key is the coefficient of each
of its arrangements.

    python3 dense_oracle.py > oracle_values.json
"""

import itertools
import json
import math
import sys
from fractions import Fraction

ROWS = [
    "e0 e1 e2 e3 e4 e5 e6 e7",
    "e1 -e0 e3 -e2 e5 -e4 -e7 e6",
    "e2 -e3 -e0 e1 e6 e7 -e4 -e5",
    "e3 e2 -e1 -e0 e7 -e6 e5 -e4",
    "e4 -e5 -e6 -e7 -e0 e1 e2 e3",
    "e5 e4 -e7 e6 -e1 -e0 -e3 e2",
    "e6 e7 e4 -e5 -e2 e3 -e0 -e1",
    "e7 -e6 e5 e4 -e3 -e2 e1 -e0",
]
TABLE = [[(-1 if t[0] == "-" else 1, int(t[-1])) for t in row.split()] for row in ROWS]
DIM = {"re1": 2, "quaternion": 4, "octonion": 8}


class G:
    """a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __add__(self, o):
        return G(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return G(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return G(self.re * o, self.im * o)
        return G(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return G(-self.re, -self.im)

    def inv(self):
        n = self.re * self.re + self.im * self.im
        return G(self.re / n, -self.im / n)

    def zero(self):
        return self.re == 0 and self.im == 0

    def text(self):
        def r(x):
            return f"{x.numerator}/{x.denominator}"

        if self.im == 0:
            return r(self.re)
        return r(self.re) + ("-" if self.im < 0 else "+") + r(abs(self.im)) + "*i"


def clean(t):
    return {k: v for k, v in t.items() if not v.zero()}


def add(x, y, s=1):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, G()) + v * s
    return clean(out)


def scale(x, c):
    return clean({k: v * c for k, v in x.items()})


def mul(x, y):
    out = {}
    for s, a in x.items():
        for u, b in y.items():
            sign, idx = 1, []
            for p, q in zip(s, u):
                sg, i = TABLE[p][q]
                sign *= sg
                idx.append(i)
            k = tuple(idx)
            out[k] = out.get(k, G()) + a * b * sign
    return clean(out)


def tensor(x, y):
    return clean({s + u: a * b for s, a in x.items() for u, b in y.items()})


def symmetrize(x):
    n = len(next(iter(x))) if x else 0
    perms = list(itertools.permutations(range(n)))
    out = {}
    for s, a in x.items():
        for p in perms:
            k = tuple(s[i] for i in p)
            out[k] = out.get(k, G()) + a * Fraction(1, len(perms))
    return clean(out)


def unit(n):
    return {(0,) * n: G(1)}


def triangle(kind):
    d = DIM[kind]
    return {(i, i): G(Fraction(1, d)) for i in range(d)}


def triangle_n(kind, n):
    return symmetrize(tensor(triangle(kind), unit(n - 2)))


def beta(n, m, d):
    return Fraction(2 * (n - m) * (2 * m + d - 2), d * n * (n - 1))


def central(kind, n, m):
    if n == 1:
        return unit(1)
    d = DIM[kind]
    tri = triangle_n(kind, n)
    out = unit(n)
    lo = (n + 1) // 2
    for mp in range(lo, n + 1):
        if mp == m:
            continue
        factor = add(tri, unit(n), -beta(n, mp, d))
        out = scale(mul(out, factor), 1 / (beta(n, m, d) - beta(n, mp, d)))
    return out


def element(kind, coords):
    return {(i,): G(*c) if isinstance(c, tuple) else G(c) for i, c in enumerate(coords) if c != 0}


def power(x, k):
    out = {(): G(1)}
    for _ in range(k):
        out = tensor(out, x)
    return out


def embed(x):
    return dict(x)


def keys(d, n):
    return list(itertools.combinations_with_replacement(range(d), n))


def sym_basis(d, n):
    return [symmetrize({k: G(1)}) for k in keys(d, n)]


def rank(vectors):
    rows = [dict(v) for v in vectors if v]
    r = 0
    while rows:
        pivot = rows.pop()
        col, val = next(iter(pivot.items()))
        inv = val.inv()
        r += 1
        nxt = []
        for row in rows:
            if col in row:
                row = add(row, pivot, -(row[col] * inv))
            if row:
                nxt.append(row)
        rows = nxt
    return r


def ideal_rank(f, d, n):
    return rank([mul(b, f) for b in sym_basis(d, n)])


def fixture(x, kind, field, n):
    terms = [{"key": list(k), "coeff": x[k].text()} for k in sorted(x) if list(k) == sorted(k)]
    return {"kind": kind, "field": field, "degree": n, "terms": terms}


def main():
    out = {"central": [], "triangle_n": [], "thm1_complex": [], "component_ranks": [], "tau": []}
    for kind, top in (("quaternion", 4), ("octonion", 3)):
        for n in range(1, top + 1):
            for m in range((n + 1) // 2, n + 1):
                e = central(kind, n, m)
                out["central"].append({"kind": kind, "n": n, "m": m, "tensor": fixture(e, kind, "rational", n)})
        for n in range(2, top + 1):
            out["triangle_n"].append({"kind": kind, "n": n, "tensor": fixture(triangle_n(kind, n), kind, "rational", n)})

    a = element("quaternion", [Fraction(1, 2), (0, Fraction(1, 2))])
    ac = element("quaternion", [Fraction(1, 2), (0, Fraction(-1, 2))])
    for n in range(1, 5):
        for m in range((n + 1) // 2, n + 1):
            e = central("quaternion", n, m)
            out["component_ranks"].append({"n": n, "m": m, "rank": ideal_rank(e, 4, n)})
        for ell in range((n + 1) // 2, n + 1):
            e = central("quaternion", n, ell)
            for k in range(n - ell, ell + 1):
                f = scale(symmetrize(tensor(power(a, k), power(ac, n - k))), math.comb(n, k))
                f = mul(f, e)
                out["thm1_complex"].append(
                    {"n": n, "ell": ell, "k": k, "rank": ideal_rank(f, 4, n),
                     "tensor": fixture(f, "quaternion", "gaussian", n)})

    e2o = central("octonion", 2, 2)
    for s1, s2, s3 in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
        t = {(0, 0): G(Fraction(1, 4)), (1, 1): G(Fraction(s1, 4)), (2, 2): G(Fraction(s2, 4)),
             (3, 3): G(Fraction(s3, 4))}
        out["tau"].append(fixture(mul(t, e2o), "octonion", "rational", 2))

    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
