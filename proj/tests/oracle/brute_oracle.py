"""Independent brute-force oracle for the gallery structures.

Structures are written directly as Python predicates (no shared code with the
C++ engine). Used to derive and freeze expected values for the C++ tests.
"""
from fractions import Fraction as F
from itertools import product
import sys


def box(lo, hi, q, dim):
    ticks = [F(k, q) for k in range(int(lo * q), int(hi * q) + 1)]
    return [tuple(p) for p in product(ticks, repeat=dim)]


class S:
    def __init__(self, name, dim, Pp, Psp, dom=lambda x: True, tors=None,
                 lo=-4, hi=4, q=1, pad=8, group=True):
        self.name, self.dim, self.Pp, self.Psp = name, dim, Pp, Psp
        self.dom, self.tors, self.group = dom, tors, group
        self.Q = [x for x in self._box(lo, hi, q) if dom(x)]
        self.W = [x for x in self._box(lo - pad, hi + pad, q) if dom(x)]
        self.lo, self.hi, self.pad = lo, hi, pad

    def _box(self, lo, hi, q):
        fr = box(lo, hi, q, self.dim)
        if self.tors:
            return [f + (t,) for f in fr for t in range(self.tors)]
        return fr

    def add(self, a, b):
        r = [a[i] + b[i] for i in range(self.dim)]
        if self.tors:
            r.append((a[-1] + b[-1]) % self.tors)
        return tuple(r)

    def neg(self, a):
        r = [-a[i] for i in range(self.dim)]
        if self.tors:
            r.append((-a[-1]) % self.tors)
        return tuple(r)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def le(self, a, b):
        return self.Pp(self.sub(b, a))

    def sle(self, a, b):
        return self.Psp(self.sub(b, a))

    def upper(self, x, y, dom=None):
        D = [z for z in self.W if self.sle(x, z) and self.le(y, z) and (dom is None or dom(z))]
        return self._least(D)

    def lower(self, x, y, dom=None):
        D = [z for z in self.W if self.sle(z, x) and self.le(z, y) and (dom is None or dom(z))]
        return self._greatest(D)

    def _least(self, D):
        for m in D:
            if all(self.le(m, z) for z in D):
                return m
        return None

    def _greatest(self, D):
        for m in D:
            if all(self.le(z, m) for z in D):
                return m
        return None


def lexP(x):
    return x[0] > 0 or (x[0] == 0 and x[1] >= 0)


def lex2P(x):
    return x[1] > 0 or (x[1] == 0 and x[0] >= 0)


def gallery():
    g = {}
    g['halfline-gap-G'] = S('G', 1, lambda x: x[0] >= 0, lambda x: x[0] == 0 or x[0] >= 2,
                            lo=-8, hi=8, q=2, pad=8)
    g['double-lex'] = S('dl', 2, lexP, lex2P, lo=-3, hi=3, pad=8)
    g['r3-two-cones'] = S('r3', 3, lambda x: x[1] == 0 and x[2] >= abs(x[0]),
                          lambda x: x[0] == 0 and x[2] >= abs(x[1]), lo=-1, hi=1, pad=5)
    g['lex-diagcone'] = S('ld', 2, lexP, lambda x: x[1] >= abs(x[0]), lo=-3, hi=3, pad=8)
    g['diag-step'] = S('ds', 2, lambda x: x in ((0, 0), (1, 1)) or (x[0] >= 2 and x[1] >= 2),
                       lambda x: x[0] >= 0 and x[0] == x[1], lo=-3, hi=3, pad=8)
    g['torsion-z2'] = S('tz', 1, lambda x: x[0] > 0 or (x[0] == 0 and x[1] == 0),
                        lambda x: x[0] >= 0 and x[0] % 2 == x[1], tors=2, lo=-6, hi=6, pad=8)
    return g


def qr_laws(s, Qs=None):
    Q = Qs or s.Q
    U = {}
    L = {}

    def up(a, b):
        k = (a, b)
        if k not in U:
            U[k] = s.upper(a, b)
        return U[k]

    def lo(a, b):
        k = (a, b)
        if k not in L:
            L[k] = s.lower(a, b)
        return L[k]

    res = {}
    # QR-B
    wb = None
    for x, y, z, u in product(Q, repeat=4):
        if s.sle(u, x) and s.sle(x, z) and s.sle(u, y) and s.sle(y, z):
            a, b = up(x, y), lo(x, y)
            if a is None or b is None:
                continue
            if not (s.sle(a, z) and s.sle(u, b)):
                wb = (x, y, z, u)
                break
    res['QR-B'] = wb
    wc = None
    for x, y, z in product(Q, repeat=3):
        if s.sle(x, y):
            a, b, c, d = lo(z, x), lo(z, y), up(z, x), up(z, y)
            if None in (a, b, c, d):
                continue
            if not (s.sle(a, b) and s.sle(c, d)):
                wc = (x, y, z)
                break
    res['QR-C'] = wc
    for law in ('QR-D', 'QR-E', 'QR-F'):
        w = None
        for x, y, z in product(Q, repeat=3):
            try:
                if law == 'QR-D':
                    l1 = up(lo(z, x), lo(z, y)); r1 = lo(z, up(x, y))
                    l2 = up(z, lo(x, y)); r2 = lo(up(z, x), up(z, y))
                    ok = s.le(l1, r1) and s.le(l2, r2)
                elif law == 'QR-E':
                    ok = s.le(lo(x, lo(y, z)), lo(lo(x, y), z)) and s.le(up(up(x, y), z), up(x, up(y, z)))
                else:
                    ok = s.le(up(lo(z, x), lo(z, y)), lo(z, up(lo(z, x), y))) and \
                        s.le(up(z, lo(up(z, x), y)), lo(up(z, x), up(z, y)))
            except TypeError:
                continue
            if not ok:
                w = (x, y, z)
                break
        res[law] = w
    return res


if __name__ == '__main__':
    g = gallery()
    names = sys.argv[1:] or list(g)
    for n in names:
        s = g[n]
        print(n, len(s.Q), len(s.W))
        print(' ', qr_laws(s))
