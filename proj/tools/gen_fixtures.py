#!/usr/bin/env python3
"""Regenerate fixtures/*.json from the printed root listings.

Roots are transcribed in Euclidean display coordinates and translated once into
simple-root coefficients. Every family and pair entry is also checked in display
coordinates against a closed-form root set, so the flags written here do not
depend on the C++ engine.

    python3 tools/gen_fixtures.py [--out fixtures]
"""
import argparse
import itertools
import json
import re
from fractions import Fraction
from pathlib import Path

# ---------------------------------------------------------------------------
# display realizations

def _names(n, extra=()):
    return ["e%d" % i for i in range(1, n + 1)] + list(extra)


class Realization:
    def __init__(self, names, simple, quotient, roots):
        self.names = names
        self.quotient = quotient
        self.simple = [self.vec(s) for s in simple]
        self.roots = {}
        for label, v in roots:
            self.roots[self.proj(v)] = label
        self._gram = None

    def proj(self, v):
        v = [Fraction(x) for x in v]
        if self.quotient:
            m = sum(v) / len(v)
            v = [x - m for x in v]
        return tuple(v)

    def vec(self, s):
        return self.proj(parse_display(s, self.names))

    def is_root(self, v):
        return self.proj(v) in self.roots

    def show(self, v):
        return self.roots.get(self.proj(v), "?")

    def translate(self, s):
        v = self.vec(s)
        M = self.simple
        n = len(M)
        # normal equations, exact
        G = [[sum(a * b for a, b in zip(M[i], M[j])) for j in range(n)] for i in range(n)]
        r = [sum(a * b for a, b in zip(M[i], v)) for i in range(n)]
        x = solve(G, r)
        back = [sum(x[i] * M[i][k] for i in range(n)) for k in range(len(v))]
        assert tuple(back) == v, "not in the root lattice: " + s
        assert all(c.denominator == 1 for c in x), s
        c = [int(t) for t in x]
        assert all(t >= 0 for t in c), "not a positive root: " + s
        return c


def solve(G, r):
    n = len(G)
    A = [row[:] + [r[i]] for i, row in enumerate(G)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col] / A[col][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return [A[i][n] / A[i][i] for i in range(n)]


def parse_display(s, names):
    s = s.replace(" ", "").replace("_", "")
    scale = Fraction(1)
    m = re.match(r"^(-?)(1/2)?\((.*)\)$", s)
    if m:
        if m.group(1) == "-":
            scale = -scale
        if m.group(2):
            scale /= 2
        s = m.group(3)
    v = [Fraction(0)] * len(names)
    for sign, coef, name in re.findall(r"([+-]?)(\d*)(e\d*)", s):
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        v[names.index(name)] += c * scale
    return v


def fmt(terms):
    out = ""
    for c, name in terms:
        if c == 0:
            continue
        sgn = "-" if c < 0 else ("+" if out else "")
        mag = abs(c)
        out += sgn + ("" if mag == 1 else str(mag)) + name
    return out


def f4_realization():
    names = _names(4)
    roots = []
    for i in range(4):
        for s in (1, -1):
            v = [0] * 4
            v[i] = s
            roots.append((fmt([(s, names[i])]), v))
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0] * 4
            v[i], v[j] = si, sj
            roots.append((fmt([(si, names[i]), (sj, names[j])]), v))
    for signs in itertools.product((1, -1), repeat=4):
        v = [Fraction(s, 2) for s in signs]
        roots.append(("1/2(" + fmt(list(zip(signs, names))) + ")", v))
    simple = ["1/2(e1-e2-e3-e4)", "e4", "e3-e4", "e2-e3"]
    return Realization(names, simple, False, roots)


def e6_realization():
    names = _names(6, ["e"])
    roots = []
    for i, j in itertools.permutations(range(6), 2):
        v = [0] * 7
        v[i], v[j] = 1, -1
        roots.append((fmt([(1, names[i]), (-1, names[j])]), v))
    for trip in itertools.combinations(range(6), 3):
        v = [0] * 7
        for i in trip:
            v[i] = 1
        v[6] = 1
        lab = fmt([(1, names[i]) for i in trip] + [(1, "e")])
        roots.append((lab, v))
        roots.append(("-(" + lab + ")", [-x for x in v]))
    top = [1] * 6 + [2]
    roots.append(("e1+e2+e3+e4+e5+e6+2e", top))
    roots.append(("-(e1+e2+e3+e4+e5+e6+2e)", [-x for x in top]))
    simple = ["e1-e2", "e2-e3", "e3-e4", "e4-e5", "e5-e6", "e4+e5+e6+e"]
    return Realization(names, simple, False, roots)


def e7_realization():
    names = _names(8)
    roots = []
    for i, j in itertools.permutations(range(8), 2):
        v = [0] * 8
        v[i], v[j] = 1, -1
        roots.append((fmt([(1, names[i]), (-1, names[j])]), v))
    for quad in itertools.combinations(range(8), 4):
        v = [1 if i in quad else 0 for i in range(8)]
        roots.append((fmt([(1, names[i]) for i in quad]), v))
    simple = ["e1-e2", "e2-e3", "e3-e4", "e4-e5", "e5-e6", "e6-e7", "e5+e6+e7+e8"]
    return Realization(names, simple, True, roots)


def e8_realization():
    names = _names(9)
    roots = []
    for i, j in itertools.permutations(range(9), 2):
        v = [0] * 9
        v[i], v[j] = 1, -1
        roots.append((fmt([(1, names[i]), (-1, names[j])]), v))
    for trip in itertools.combinations(range(9), 3):
        v = [1 if i in trip else 0 for i in range(9)]
        lab = fmt([(1, names[i]) for i in trip])
        roots.append((lab, v))
        roots.append(("-(" + lab + ")", [-x for x in v]))
    simple = ["e1-e2", "e2-e3", "e3-e4", "e4-e5", "e5-e6", "e6-e7", "e7-e8", "e6+e7+e8"]
    return Realization(names, simple, True, roots)


# ---------------------------------------------------------------------------
# transcribed listings

F4_MODULES = [
    ["e3", "e1-e2", "e3-e4", "e3+e4", "1/2(e1-e2+e3+e4)", "1/2(e1-e2+e3-e4)"],
    ["e2-e3"],
    ["e2", "e1-e3", "e2-e4", "e2+e4", "1/2(e1+e2-e3+e4)", "1/2(e1+e2-e3-e4)"],
    ["e1", "e1-e4", "e1+e4", "e2+e3", "1/2(e1+e2+e3+e4)", "1/2(e1+e2+e3-e4)"],
    ["e1+e3"],
    ["e1+e2"],
]

E6_MODULES = [
    "e3-e4,e2-e4,e3-e5,e1-e4,e1-e5,e1-e6,e2-e5,e2-e6,e3-e6".split(","),
    ["e4+e5+e6+e"],
    "e1+e4+e6+e,e2+e4+e6+e,e3+e4+e5+e,e3+e5+e6+e,e1+e4+e5+e,e1+e5+e6+e,e2+e4+e5+e,e2+e5+e6+e,e3+e4+e6+e".split(","),
    "e1+e2+e5+e,e1+e3+e4+e,e1+e3+e6+e,e2+e3+e4+e,e2+e3+e6+e,e1+e2+e4+e,e1+e2+e6+e,e1+e3+e5+e,e2+e3+e5+e".split(","),
    ["e1+e2+e3+e"],
    ["e1+e2+e3+e4+e5+e6+2e"],
]

E7_MODULES = [
    ("e1-e6,e2-e6,e3-e6,e4-e6,e5-e6,e4+e5+e7+e8,e3+e5+e7+e8,e3+e4+e7+e8,e2+e5+e7+e8,"
     "e2+e4+e7+e8,e2+e3+e7+e8,e1+e5+e7+e8,e1+e4+e7+e8,e1+e3+e7+e8,e1+e2+e7+e8").split(","),
    ["e6-e7"],
    ("e1-e7,e2-e7,e3-e7,e4-e7,e5-e7,e4+e5+e6+e8,e3+e5+e6+e8,e3+e4+e6+e8,e2+e5+e6+e8,"
     "e2+e4+e6+e8,e2+e3+e6+e8,e1+e5+e6+e8,e1+e4+e6+e8,e1+e3+e6+e8,e1+e2+e6+e8").split(","),
    ("e3+e4+e5+e8,e2+e4+e5+e8,e2+e3+e5+e8,e2+e3+e4+e8,e1+e4+e5+e8,e1+e3+e5+e8,e1+e3+e4+e8,"
     "e1+e2+e5+e8,e1+e2+e4+e8,e1+e2+e3+e8,-(e1-e8),-(e2-e8),-(e3-e8),-(e4-e8),-(e5-e8)").split(","),
    ["-(e6-e8)"],
    ["-(e7-e8)"],
]
E7_NOTES = ["beta_10^1 is printed as e2+e2+e7+e8; e2+e4+e7+e8 is the only reading that lands in m(1,0) and completes the pattern"]


def _e8_mid(a, b):
    out = ["e%d-e%d" % (a, i) for i in range(3, 9)]
    for j in range(3, 8):
        out += ["e%d+e%d+e%d" % (a, j, i) for i in range(j + 1, 9)]
    out += ["-(e%d+e%d+e9)" % (b, i) for i in range(3, 9)]
    return out


def _e8_four():
    out = ["e%d-e9" % i for i in range(3, 9)] + ["e1+e2+e%d" % i for i in range(3, 9)]
    for j in range(3, 8):
        out += ["-(e%d+e%d+e9)" % (j, i) for i in range(j + 1, 9)]
    return out


E8_MODULES = [["e1-e2"], _e8_mid(2, 1), _e8_mid(1, 2), _e8_four(), ["e2-e9"], ["e1-e9"]]
E8_NOTES = [
    "the single root of n(1,0) is printed as e1-e-2 and read as e1-e2",
    "the first block of n(1,2) is printed as e_i-e9 without a range; i = 3..8 is the only range giving 27 roots",
]


def full(p, q, n, fixed_i=None, fixed_j=None):
    if fixed_i is not None:
        return [(fixed_i, j) for j in range(1, n + 1)]
    return [(i, fixed_j) for i in range(1, n + 1)]


def rows_to_pairs(rows):
    return [(i, j) for i, js in rows.items() for j in js]


F4_PAIRS = {
    (1, 3): [(1, 3), (1, 4), (2, 5), (2, 6), (3, 1), (3, 6), (4, 1), (4, 5), (5, 2), (5, 4), (6, 2), (6, 3)],
    (1, 4): [(1, 2), (1, 3), (2, 5), (2, 6), (3, 1), (3, 5), (4, 1), (4, 6), (5, 2), (5, 4), (6, 3), (6, 4)],
    (1, 6): full(1, 6, 6, fixed_j=1),
    (2, 4): full(2, 4, 6, fixed_i=1),
    (3, 4): [(1, 2), (1, 3), (2, 5), (2, 6), (3, 1), (3, 5), (4, 1), (4, 6), (5, 2), (5, 4), (6, 3), (6, 4)],
    (3, 5): full(3, 5, 6, fixed_j=1),
}

E6_PAIRS = {
    (1, 3): [(1, 3), (1, 6), (1, 8), (1, 9), (2, 2), (2, 4), (2, 6), (2, 7), (3, 1), (3, 2), (3, 3), (3, 4),
             (4, 1), (4, 4), (4, 5), (4, 8), (5, 2), (5, 5), (5, 6), (5, 9), (6, 1), (6, 3), (6, 6), (6, 7),
             (7, 1), (7, 7), (7, 8), (7, 9), (8, 2), (8, 3), (8, 5), (8, 8), (9, 4), (9, 5), (9, 7), (9, 9)],
    (1, 4): [(1, 1), (1, 2), (1, 4), (1, 7), (2, 3), (2, 4), (2, 6), (2, 8), (3, 6), (3, 7), (3, 8), (3, 9),
             (4, 2), (4, 5), (4, 6), (4, 9), (5, 1), (5, 4), (5, 5), (5, 8), (6, 3), (6, 4), (6, 7), (6, 9),
             (7, 1), (7, 2), (7, 3), (7, 9), (8, 2), (8, 5), (8, 7), (8, 8), (9, 1), (9, 3), (9, 5), (9, 6)],
    (1, 6): full(1, 6, 9, fixed_j=1),
    (2, 4): full(2, 4, 9, fixed_i=1),
    (3, 4): [(1, 1), (1, 4), (1, 5), (1, 8), (1, 9), (2, 1), (2, 2), (2, 3), (2, 8), (2, 9), (3, 1), (3, 3),
             (3, 5), (3, 6), (3, 7), (4, 1), (4, 2), (4, 4), (4, 6), (4, 7), (5, 3), (5, 4), (5, 5), (5, 7),
             (5, 9), (6, 2), (6, 4), (6, 5), (6, 6), (6, 9), (7, 2), (7, 3), (7, 5), (7, 7), (7, 8), (8, 2),
             (8, 3), (8, 4), (8, 6), (8, 8), (9, 1), (9, 6), (9, 7), (9, 8), (9, 9)],
    (3, 5): full(3, 5, 9, fixed_j=1),
}

E7_ROWS_13 = {1: [2, 3, 4, 5, 12, 13, 14, 15], 2: [1, 3, 4, 5, 9, 10, 11, 15], 3: [1, 2, 4, 5, 7, 8, 11, 14],
              4: [1, 2, 3, 5, 6, 8, 10, 13], 5: [1, 2, 3, 4, 6, 7, 9, 12], 6: [4, 5, 7, 8, 9, 10, 12, 13],
              7: [3, 5, 6, 8, 9, 11, 12, 14], 8: [3, 4, 6, 7, 10, 11, 13, 14], 9: [2, 5, 6, 7, 10, 11, 12, 15],
              10: [2, 4, 6, 8, 9, 11, 13, 15], 11: [2, 3, 7, 8, 9, 10, 14, 15], 12: [1, 5, 6, 7, 9, 13, 14, 15],
              13: [1, 4, 5, 6, 8, 10, 12, 14, 15], 14: [1, 3, 7, 8, 11, 12, 13, 15], 15: [1, 2, 9, 10, 11, 12, 13, 14]}
E7_ROWS_14 = {1: [1, 2, 3, 4, 12, 13, 14, 15], 2: [1, 5, 6, 7, 11, 13, 14, 15], 3: [2, 5, 8, 9, 11, 12, 14, 15],
              4: [3, 6, 8, 10, 11, 12, 13, 15], 5: [4, 7, 9, 10, 11, 12, 13, 14], 6: [3, 4, 6, 7, 8, 9, 14, 15],
              7: [2, 4, 5, 7, 8, 10, 13, 15], 8: [2, 3, 5, 6, 9, 10, 13, 14], 9: [1, 4, 5, 6, 9, 10, 12, 15],
              10: [1, 3, 5, 7, 8, 10, 12, 14], 11: [1, 2, 6, 7, 8, 9, 12, 13], 12: [1, 2, 3, 7, 9, 10, 11, 15],
              13: [1, 2, 4, 6, 8, 10, 11, 14], 14: [1, 3, 4, 5, 8, 9, 11, 13], 15: [2, 3, 4, 5, 6, 7, 11, 12]}
E7_ROWS_34 = dict(E7_ROWS_14)
E7_PAIRS = {
    (1, 3): rows_to_pairs(E7_ROWS_13),
    (1, 4): rows_to_pairs(E7_ROWS_14),
    (1, 6): full(1, 6, 15, fixed_j=1),
    (2, 4): full(2, 4, 15, fixed_i=1),
    (3, 4): rows_to_pairs(E7_ROWS_34),
    (3, 5): full(3, 5, 15, fixed_j=1),
}
E7_PAIR_NOTES = {
    (1, 3): ["the row for beta_3^1 is printed twice and the row for beta_4^1 is printed as beta_1^4 +- beta_j^3; read as row 4"],
    (1, 4): ["row 10 ends in '12,4', read as 12,14"],
}

R = lambda a, b: list(range(a, b + 1))
E8_ROWS_23 = {1: [2, 3, 4, 5, 6] + R(12, 22), 2: [1, 3, 4, 5, 6, 8, 9, 10, 11, 16, 17, 18, 19, 20, 21, 23],
              3: [1, 2, 4] + R(5, 11) + [13, 14, 15, 19, 20, 21, 24], 4: [1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 14, 15, 17, 18, 21, 25],
              5: R(1, 9) + [11, 12, 13, 15, 16, 18, 20, 26], 6: [1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 13, 14, 16, 17, 19, 27],
              7: [3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15] + R(22, 27)}
E8_ROWS_24 = {1: [2, 3, 4, 5, 6, 7] + R(18, 27), 2: [1, 3, 4, 5, 6, 8, 14, 15, 16, 17] + R(22, 27),
              3: [1, 2, 4, 5, 6] + R(13, 17) + [19, 20, 21, 25, 26, 27], 4: [1, 2, 3, 5, 6, 10, 13, 14, 16, 17, 18, 20, 21, 23, 24, 27],
              5: [1, 2, 3, 4, 6, 11, 13, 14, 15, 17, 18, 19, 21, 22, 24, 26],
              6: [1, 2, 3, 4, 5, 12, 13, 14, 15, 16, 18, 19, 20, 22, 23, 25],
              7: [3, 4, 5, 6, 9] + R(11, 18)}
E8_ROWS_34 = {1: [2, 3, 4, 5, 6, 7] + R(18, 27), 2: [1, 3, 4, 5, 6, 8, 14, 15, 16, 17] + R(22, 27),
              3: [1, 2, 4, 5, 6, 9, 13, 15, 16, 17, 19, 20, 21, 25, 26, 27],
              4: [1, 2, 3, 5, 6, 10, 13, 14, 16, 17, 18, 20, 21, 23, 24, 27],
              5: [1, 2, 3, 4, 6, 11, 13, 14, 15, 17, 18, 19, 21, 22, 24, 27],
              6: [1, 2, 3, 4, 5, 13, 14, 15, 16, 18, 19, 20, 22, 23, 25, 27],
              7: [3, 4, 5, 6, 9, 10, 11, 12] + R(14, 21)}
E8_PAIRS = {
    (1, 4): full(1, 4, 27, fixed_i=1),
    (2, 3): rows_to_pairs(E8_ROWS_23),
    (2, 4): rows_to_pairs(E8_ROWS_24),
    (2, 6): full(2, 6, 27, fixed_j=1),
    (3, 4): rows_to_pairs(E8_ROWS_34),
    (3, 5): full(3, 5, 27, fixed_j=1),
}
E8_PAIR_NOTES = {
    (2, 3): ["only rows 1..7 are printed; the list continues with an ellipsis"],
    (2, 4): ["only rows 1..7 are printed; row 6 prints 18 twice and the second is read as 19"],
    (3, 4): ["only rows 1..7 are printed"],
}

F4_FAMILIES = """b3^3 b1^1 b6^1|b1^4 b3^1 b4^1|b3^3 b1^4 b5^4|b4^3 b1^1 b5^1
b2^4 b1^1 b5^1|b4^3 b1^4 b6^4|b5^3 b2^1 b4^1|b3^4 b1^1 b6^1
b5^3 b2^4 b4^4|b6^3 b2^1 b3^1|b4^4 b5^1 b6^1|b6^3 b3^4 b4^4
b1^3 b4^1 b3^1|b5^4 b2^1 b3^1|b1^4 b3^3 b4^3|b2^3 b5^1 b6^1
b6^4 b2^1 b4^1|b2^4 b1^3 b5^3|b1^1 b3^3 b4^3|b1^1 b2^4 b3^4
b3^4 b1^3 b6^3|b2^1 b5^3 b6^3|b2^1 b5^4 b6^4|b4^4 b5^3 b6^3
b3^1 b1^3 b6^3|b3^1 b1^4 b5^4|b5^4 b2^3 b3^3|b4^1 b1^3 b5^3
b4^1 b1^4 b6^4|b6^4 b2^3 b4^3|b5^1 b2^3 b4^3|b5^1 b2^4 b4^4
b1^3 b2^4 b3^4|b6^1 b2^3 b3^3|b6^1 b3^4 b4^4|b2^3 b5^4 b6^4"""
F4_WRAPPED = ["b1^6 b1..6^1", "b1^2 b1..6^4", "b1^5 b1..6^3"]
F4_WRAP_NOTE = "printed across a line wrap; the cell ending in a dangling direct sum is joined with its continuation cell"

E6_GROUP1 = """b1^3 b3^1 b4^1 b6^1 b7^1|b1^4 b1^1 b5^1 b7^1 b9^1|b1^1 b7^1 b1^4 b2^4|b3^1 b4^1 b1^3 b4^3
b2^3 b2^1 b3^1 b5^1 b8^1|b2^4 b1^1 b4^1 b7^1 b8^1|b1^1 b6^1 b4^4 b7^4|b6^1 b7^1 b1^3 b7^3
b3^3 b1^1 b3^1 b6^1 b8^1|b3^4 b2^1 b6^1 b7^1 b9^1|b3^1 b8^1 b7^4 b8^4|b4^1 b7^1 b1^3 b8^3
b4^3 b2^1 b3^1 b4^1 b9^1|b4^4 b1^1 b2^1 b5^1 b6^1|b4^1 b8^1 b2^4 b5^4|b2^1 b3^1 b2^3 b4^3
b5^3 b4^1 b5^1 b8^1 b9^1|b5^4 b4^1 b5^1 b8^1 b9^1|b4^1 b9^1 b5^4 b6^4|b5^1 b8^1 b2^3 b5^3
b6^3 b1^1 b2^1 b5^1 b6^1|b6^4 b2^1 b3^1 b4^1 b9^1|b2^1 b6^1 b3^4 b4^4|b1^1 b7^1 b8^3 b9^3
b7^3 b2^1 b6^1 b7^1 b9^1|b7^4 b1^1 b3^1 b6^1 b8^1|b1^1 b5^1 b1^4 b4^4|b2^1 b5^1 b2^3 b6^3
b8^3 b1^1 b4^1 b7^1 b8^1|b8^4 b2^1 b3^1 b5^1 b8^1|b1^1 b6^1 b3^3 b6^3|b2^1 b6^1 b2^3 b7^3
b9^3 b1^1 b5^1 b7^1 b9^1|b9^4 b3^1 b4^1 b6^1 b7^1|b1^1 b7^1 b8^3 b9^3|b1^1 b6^1 b3^3 b6^3
b1^1 b3^3 b6^3 b8^3 b9^3|b1^1 b1^4 b2^4 b4^4 b7^4|b2^1 b6^1 b6^3 b7^3|b1^1 b8^1 b3^3 b8^3
b2^1 b2^3 b4^3 b6^3 b7^3|b2^1 b3^4 b4^4 b6^4 b8^4|b3^1 b8^1 b2^3 b3^3|b4^1 b9^1 b4^3 b5^3
b3^1 b1^3 b2^3 b3^3 b4^3|b3^1 b6^4 b7^4 b8^4 b9^4|b4^1 b9^1 b4^3 b5^3|b2^1 b9^1 b4^3 b7^3
b4^1 b1^3 b4^3 b5^3 b8^3|b4^1 b2^4 b5^4 b6^4 b9^4|b4^1 b8^1 b5^3 b8^3|b4^1 b8^1 b5^3 b8^3
b5^1 b2^3 b5^3 b6^3 b9^3|b5^1 b1^4 b4^4 b5^4 b8^4|b1^1 b5^1 b6^3 b9^3|b5^1 b9^1 b5^3 b9^3
b6^1 b1^3 b3^3 b6^3 b7^3|b6^1 b3^4 b4^4 b7^4 b9^4|b3^1 b6^1 b1^3 b3^3|b2^1 b6^1 b6^3 b7^3
b7^1 b1^3 b7^3 b8^3 b9^3|b7^1 b1^4 b2^4 b3^4 b9^4|b1^6 b1..9^1|b7^1 b9^1 b7^3 b9^3
b8^1 b2^3 b3^3 b5^3 b8^3|b8^1 b2^4 b5^4 b7^4 b8^4|b1^2 b1..9^4|b1^1 b7^1 b1^4 b2^4
b9^1 b4^3 b5^3 b7^3 b9^3|b9^1 b1^4 b3^4 b5^4 b6^4|b1^5 b1..9^3|b7^1 b9^1 b1^4 b3^4
b1^1 b5^1 b1^4 b4^4|b1^1 b8^1 b2^4 b7^4|b2^1 b9^1 b3^4 b6^4|b2^1 b5^1 b4^4 b8^4
b5^1 b9^1 b1^4 b5^4|b4^1 b7^1 b2^4 b9^4|b6^1 b7^1 b3^4 b9^4|b4^1 b9^1 b5^4 b6^4
b4^1 b8^1 b2^4 b5^4|b2^1 b6^1 b3^4 b4^4|b1^1 b6^1 b4^4 b7^4|b2^1 b3^1 b6^4 b8^4
b3^1 b8^1 b7^4 b8^4|b3^1 b6^1 b7^4 b9^4"""

E6_GROUP2 = """b1^4 b1^3 b2^3 b3^3 b4^3 b9^3|b2^4 b3^4 b8^4 b2^3 b7^3 b8^3|b4^4 b7^4 b4^3 b5^3
b2^4 b2^3 b4^3 b6^3 b7^3 b8^3|b4^4 b5^4 b9^4 b1^3 b5^3 b6^3|b4^4 b8^4 b1^3 b8^3
b3^4 b2^3 b3^3 b5^3 b7^3 b8^3|b1^4 b6^4 b7^4 b3^3 b4^3 b9^3|b5^4 b6^4 b3^3 b6^3
b4^4 b1^3 b5^3 b6^3 b8^3 b4^3|b2^4 b4^4 b6^4 b6^3 b8^3 b4^3|b5^4 b8^4 b1^3 b7^3
b5^4 b1^3 b3^3 b5^3 b6^3 b7^3|b1^4 b8^4 b9^4 b1^3 b2^3 b9^3|b6^4 b8^4 b8^3 b9^3
b6^4 b3^3 b4^3 b6^3 b8^3 b9^3|b3^4 b5^4 b7^4 b3^3 b5^3 b7^3|b6^4 b9^4 b6^3 b9^3
b7^4 b3^3 b4^3 b5^3 b7^3 b9^3|b1^3 b5^3 b6^3 b5^4 b9^4|b7^4 b8^4 b7^3 b9^3
b8^4 b1^3 b2^3 b7^3 b8^3 b9^3|b3^3 b4^3 b9^3 b6^4 b7^4|b7^4 b9^4 b5^3 b9^3
b9^4 b1^3 b2^3 b5^3 b6^3 b9^3|b1^4 b2^4 b2^3 b4^3|b1^4 b3^4 b2^3 b3^3
b1^3 b1^4 b4^4 b5^4 b8^4 b9^4|b2^3 b1^4 b2^4 b3^4 b8^4 b9^4|b1^4 b4^4 b1^3 b4^3
b3^3 b1^4 b3^4 b5^4 b6^4 b7^4|b1^4 b5^4 b1^3 b3^3|b2^4 b5^4 b6^3 b7^3
b4^3 b1^4 b2^4 b4^4 b6^4 b7^4|b5^3 b3^4 b4^4 b5^4 b7^4 b9^4|b2^4 b7^4 b4^3 b9^3
b6^3 b2^4 b4^4 b5^4 b6^4 b9^4|b2^4 b9^4 b2^3 b6^3|b3^4 b4^4 b5^3 b8^3
b7^3 b2^4 b3^4 b5^4 b7^4 b8^4|b8^3 b2^4 b3^4 b4^4 b6^4 b8^4|b3^4 b6^4 b3^3 b8^3
b9^3 b1^4 b6^4 b7^4 b8^4 b9^4|b3^4 b9^4 b2^3 b5^3"""

E7_FAMILIES = [
    ("b1^1 b2..5^3 b12..15^3", None),
    ("b1^1 b1..4^4 b12..15^4", None),
    ("b1^6 b1..15^1", None),
    ("b1^5 b1..15^3", None),
    ("b1^3 b1..4^4 b12..15^4", None),
    ("b5^3 b4^4 b7^4 b9..14^4", None),
    ("b1^2 b1..15^4", None),
    ("b5^1 b12^3 b12^4", None),
    ("b9^1 b5^3 b10^3 b15^3 b5^4 b10^4 b15^4", "first summand printed as beta_1^9 (no ninth module); read as beta_9^1"),
    ("b11^1 b14^3 b3^4 b8^4 b9^4", None),
    ("b14^3 b3..7^4 b1^4 b11^4 b13^4", None),
    ("b3^1 b4^3 b8^4 b11^4 b12^4 b15^4", None),
    ("b14^1 b3..5^4 b1^4 b11^4 b8^4 b9^4 b13^4", None),
    ("b7^1 b8^3 b2^4 b5^4 b10^4 b11^4", None),
    ("b15^1 b14^3 b3^4 b4^4 b5^4 b11^4", None),
    ("b3^1 b3^3 b2^4 b5^4 b8^4 b11^4 b14^4", None),
    ("b7^3 b3^1 b11^1 b12^1 b2^4", None),
    ("b7^3 b5^1 b6^1 b4^4 b7^4", None),
    ("b7^3 b3^1 b8^1 b14^1 b5^4", None),
    ("b7^3 b3^1 b6^1 b8^4 b15^4", None),
    ("b7^3 b8^1 b12^1 b10^4 b15^4", None),
    ("b7^3 b6^1 b11^1 b7^4 b8^4", None),
    ("b7^3 b11^1 b12^1 b14^1 b4^4 b8^4", "beta_8^4 is printed twice"),
    ("b1^1 b3^3 b4^3 b12..15^3 b2^4 b3^4 b12..15^4", None),
    ("b12^1 b1^3 b9^3 b15^3 b1^4 b9^4 b15^4", None),
]

E8_FAMILIES = [
    ("b1^1 b1..27^4", None),
    ("b1^6 b1..27^2", None),
    ("b1^5 b1..27^3", None),
    ("b1^2 b2^3 b3..6^4 b22..27^4", None),
    ("b2^2 b1^3 b3..6^4 b22..27^4", None),
    ("b2^2 b3^3 b1^4 b4..6^4 b15..17^4 b25..27^4", None),
    ("b6^2 b7^3 b3..5^4 b14..16^4 b18..20^4", "first summand printed as beta_2^6 (the sixth module has one root); read as beta_6^2"),
    ("b7^2 b6^3 b3..5^4 b13..16^4 b18^4", None),
    ("b1^2 b2..6^3 b12..22^3", None),
    ("b1^2 b2^2 b3..6^3 b16..21^3", None),
    ("b1^2 b2^2 b3^2 b4..6^3 b19..21^3", None),
    ("b1^2 b2..7^4 b18..27^4", None),
    ("b1^2 b2^2 b3..6^4 b22..27^4", None),
    ("b1^2 b2^2 b3^2 b4..6^4 b25..27^4", None),
    ("b1^3 b2..7^4 b18..27^4", None),
    ("b1^3 b2^3 b3..6^4 b22..27^4", None),
    ("b1^3 b2^3 b3^3 b4..6^4 b25..27^4", None),
    ("b1^2 b2^2 b4^3 b3^4 b5..6^4 b23..24^4 b27^4", None),
    ("b1^3 b2^3 b3^2 b4..6^4 b25..27^4", None),
    ("b3^2 b4^2 b5^3 b1..2^4 b13..14^4 b6^4 b17^4 b21^4", None),
    ("b4^3 b5^3 b6^2 b1..3^4 b13..14^4 b18^4", None),
]

TYPE_I = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
TYPE_II = [[1, 0], [0, 1], [1, 1], [1, 2], [1, 3], [2, 3]]

# printed upper bounds for [m_i, m_j]; "k" is the isotropy subalgebra
INCL_I = {(1, 2): [3], (1, 3): [2, 4], (1, 4): [3, 5], (1, 5): [4], (1, 6): ["k"], (2, 3): [1], (2, 4): ["k"],
          (2, 5): [6], (2, 6): [5], (3, 4): [1, 6], (3, 5): ["k"], (3, 6): [4], (4, 5): [1], (4, 6): [3], (5, 6): [2]}
INCL_II = {(1, 2): [3], (1, 3): [2], (1, 4): ["k"], (1, 5): [6], (1, 6): [5], (2, 3): [1, 4], (2, 4): [3, 5],
           (2, 5): [4], (2, 6): ["k"], (3, 4): [2, 6], (3, 5): ["k"], (3, 6): [4], (4, 5): [2], (4, 6): [3], (5, 6): [1]}


def inclusions(table):
    out = [{"pair": [i, i], "targets": ["k"]} for i in range(1, 7)]
    for (i, j), t in sorted(table.items()):
        out.append({"pair": [i, j], "targets": t})
    return out


# ---------------------------------------------------------------------------

def parse_fam(s):
    out = []
    for tok in s.split():
        m = re.match(r"b(\d+)(?:\.\.(\d+))?\^(\d+)$", tok)
        a, b, mod = int(m.group(1)), int(m.group(2) or m.group(1)), int(m.group(3))
        out += [(mod, i) for i in range(a, b + 1)]
    return out


def lab(m, i):
    return "b%d^%d" % (i, m)


class Space:
    def __init__(self, name, typ, painted, kind, dims, real, modules):
        self.name, self.typ, self.painted, self.kind, self.dims = name, typ, painted, kind, dims
        self.real = real
        self.display = modules
        self.vecs = [[real.vec(s) for s in mod] for mod in modules]
        self.coeffs = [[real.translate(s) for s in mod] for mod in modules]
        troots = TYPE_I if kind == "TypeI" else TYPE_II
        for k, mod in enumerate(self.coeffs):
            for c in mod:
                assert [c[p - 1] for p in painted] == troots[k], (name, k, c)
            assert 2 * len(mod) == dims[k], (name, k)

    def clash(self, a, b):
        """display root witnessing that a, b are incompatible, or None"""
        (p, i), (q, j) = a, b
        if p == q:
            return None
        u, w = self.vecs[p - 1][i - 1], self.vecs[q - 1][j - 1]
        plus = tuple(x + y for x, y in zip(u, w))
        minus = tuple(x - y for x, y in zip(u, w))
        if self.real.is_root(plus):
            return "%s + %s = %s is a root" % (lab(*a), lab(*b), self.real.show(plus))
        if self.real.is_root(minus):
            return "%s - %s = %s is a root" % (lab(*a), lab(*b), self.real.show(minus))
        return None

    def valid(self, label):
        m, i = label
        return 1 <= m <= len(self.vecs) and 1 <= i <= len(self.vecs[m - 1])


def family_entries(sp, specs, group=1):
    out, seen = [], {}
    for spec, note in specs:
        members = parse_fam(spec)
        dedup = list(dict.fromkeys(members))
        for l in dedup:
            assert sp.valid(l), (sp.name, spec, l)
        key = frozenset(dedup)
        if key in seen:
            seen[key]["note"] = (seen[key].get("note", "") + "; " if seen[key].get("note") else "") + "listed more than once"
            continue
        e = {"spec": spec, "group": group, "members": [list(l) for l in dedup]}
        clashes = [c for a, b in itertools.combinations(dedup, 2) if (c := sp.clash(a, b))]
        notes = [note] if note else []
        if clashes:
            notes.append("refuted in display coordinates: " + "; ".join(clashes[:3]) + ("; ..." if len(clashes) > 3 else ""))
        # typo readings are ambiguous even when they pass
        if clashes or (note and "read as" in note):
            e["suspect"] = True
        if notes:
            e["note"] = " | ".join(notes)
        seen[key] = e
        out.append(e)
    return out


def pair_entries(sp, pairs, notes=None):
    notes = notes or {}
    out = []
    for (p, q), lst in sorted(pairs.items()):
        lst = sorted(set(lst))
        n = len(sp.vecs[p - 1])
        m = len(sp.vecs[q - 1])
        suspect = []
        for i, j in lst:
            c = sp.clash((p, i), (q, j))
            if c:
                suspect.append([i, j, c])
        rows = sorted({i for i, _ in lst})
        extra = list(notes.get((p, q), []))
        complete = []
        for i in rows:
            printed = {j for ii, j in lst if ii == i and not sp.clash((p, i), (q, j))}
            actual = {j for j in range(1, m + 1) if not sp.clash((p, i), (q, j))}
            if printed == actual:
                complete.append(i)
            else:
                extra.append("row %d omits %s" % (i, ", ".join(lab(q, j) for j in sorted(actual - printed))))
        e = {"modules": [p, q], "pairs": [list(x) for x in lst], "rows": complete}
        if suspect:
            e["suspect"] = suspect
        if extra:
            e["notes"] = extra
        out.append(e)
    return out


def write(path, obj):
    path.write_text(json.dumps(obj, indent=1, ensure_ascii=False) + "\n")


def build(out_dir):
    out_dir.mkdir(parents=True, exist_ok=True)

    def base(sp):
        return {"schema": 1, "space": sp.name, "type": sp.typ, "painted": sp.painted, "kind": sp.kind,
                "troots": TYPE_I if sp.kind == "TypeI" else TYPE_II, "dims": sp.dims,
                "inclusions": inclusions(INCL_I if sp.kind == "TypeI" else INCL_II),
                "label_map": sp.coeffs, "display": sp.display}

    f4 = Space("F4_34", "F4", [3, 4], "TypeI", [12, 2, 12, 12, 2, 2], f4_realization(), F4_MODULES)
    fams = [(s, None) for line in F4_FAMILIES.split("\n") for s in line.split("|")]
    fams += [(s, F4_WRAP_NOTE) for s in F4_WRAPPED]
    doc = base(f4)
    doc["pair_lists"] = pair_entries(f4, F4_PAIRS)
    doc["families"] = family_entries(f4, fams)
    write(out_dir / "F4_34.json", doc)

    e6 = Space("E6_36", "E6", [3, 6], "TypeI", [18, 2, 18, 18, 2, 2], e6_realization(), E6_MODULES)
    doc = base(e6)
    doc["notes"] = ["m(1,1) lists nine roots under a label range ending at 8; the nine listed roots are used"]
    doc["pair_lists"] = pair_entries(e6, E6_PAIRS)
    g1 = [(s, None) for line in E6_GROUP1.split("\n") for s in line.split("|")]
    g2 = [(s, None) for line in E6_GROUP2.split("\n") for s in line.split("|")]
    doc["families"] = family_entries(e6, g1, 1) + family_entries(e6, g2, 2)
    write(out_dir / "E6_36.json", doc)

    e7 = Space("E7_56", "E7", [5, 6], "TypeI", [30, 2, 30, 30, 2, 2], e7_realization(), E7_MODULES)
    doc = base(e7)
    doc["notes"] = E7_NOTES
    doc["pair_lists"] = pair_entries(e7, E7_PAIRS, E7_PAIR_NOTES)
    doc["families"] = family_entries(e7, E7_FAMILIES)
    write(out_dir / "E7_56.json", doc)

    e8 = Space("E8_12", "E8", [1, 2], "TypeII", [2, 54, 54, 54, 2, 2], e8_realization(), E8_MODULES)
    doc = base(e8)
    doc["notes"] = E8_NOTES
    doc["pair_lists"] = pair_entries(e8, E8_PAIRS, E8_PAIR_NOTES)
    doc["families"] = family_entries(e8, E8_FAMILIES)
    write(out_dir / "E8_12.json", doc)

    # full flag of G2: one root per module, no printed listings beyond the tables
    g2 = {"schema": 1, "space": "G2_12", "type": "G2", "painted": [1, 2], "kind": "TypeI", "troots": TYPE_I,
          "dims": [2] * 6, "inclusions": inclusions(INCL_I), "label_map": [[t] for t in TYPE_I]}
    write(out_dir / "G2_12.json", g2)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    build(Path(ap.parse_args().out))
