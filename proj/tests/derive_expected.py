#!/usr/bin/env python3
"""Brute-force reference values for the running example.

Independent of the C++ code: everything is recomputed by enumerating index
assignments and subsets. The numbers it prints are frozen into the C++ tests.
"""
from itertools import combinations

TABLE1 = [
    (1, "A", 6, 12), (1, "B", 10, 17), (1, "C", 19, 25), (1, "E", 21, 23),
    (2, "A", 2, 7), (2, "B", 5, 10), (2, "D", 5, 12), (2, "C", 16, 22), (2, "E", 18, 20),
    (3, "B", 6, 12), (3, "A", 8, 14), (3, "C", 14, 20), (3, "E", 16, 18),
    (4, "B", 1, 5), (4, "C", 8, 14), (4, "E", 9, 12), (4, "F", 9, 12),
]
P = {"A": 2, "B": 1, "C": 1, "D": 3, "E": 2, "F": 5}


def csequences():
    out = {}
    for sid in sorted({r[0] for r in TABLE1}):
        rows = [r for r in TABLE1 if r[0] == sid]
        pts = sorted({t for r in rows for t in (r[2], r[3])})
        out[sid] = [
            (frozenset(r[1] for r in rows if r[2] <= a and b <= r[3]), b - a)
            for a, b in zip(pts, pts[1:])
        ]
    return out


C = csequences()


def u_set(labels, lam):
    return sum(P[l] for l in labels) * lam


def match_utils(L, cs):
    res = []
    for idx in combinations(range(len(cs)), len(L)):
        if all(L[k] <= cs[j][0] for k, j in enumerate(idx)):
            res.append(sum(u_set(L[k], cs[j][1]) for k, j in enumerate(idx)))
    return res


def umax(L):
    return sum(max(match_utils(L, cs), default=0) for cs in C.values())


def umaxk(cs, k):
    best = 0
    for r in range(0, k + 1):
        for idx in combinations(range(len(cs)), r):
            best = max(best, sum(u_set(cs[j][0], cs[j][1]) for j in idx))
    return best


def lwu(L, k):
    if k == 0:
        return 0
    return sum(umaxk(cs, k) for cs in C.values() if match_utils(L, cs))


def proj(L, k):
    return umax(L) + lwu(L, k - len(L))


def fs(*xs):
    return frozenset(xs)


if __name__ == "__main__":
    print("us", {i: sum(u_set(c, l) for c, l in cs) for i, cs in C.items()})
    print("umaxk(C1,1)", umaxk(C[1], 1), "umaxk(C1,2)", umaxk(C[1], 2))
    print("uset <B> C1", sorted(match_utils([fs("B")], C[1])))
    print("uset <A><B> C1", match_utils([fs("A"), fs("B")], C[1]))
    print("umax <A><B>", umax([fs("A"), fs("B")]))
    print("umax <CE>", umax([fs("C", "E")]))
    print("umax <A>", umax([fs("A")]), "LWU2 <A>", lwu([fs("A")], 2), "P3 <A>", proj([fs("A")], 3))
    print("P4 <C>", proj([fs("C")], 4), "LWU4 <C>", lwu([fs("C")], 4))
    print("LWU3 <A><B>", lwu([fs("A"), fs("B")], 3), "P3", proj([fs("A"), fs("B")], 3))
    print("singletons", {l: umax([fs(l)]) for l in sorted(P)})
    # Count patterns K<=3, Z<=2 with umax >= 22.
    alphabet = sorted(P)
    coins = [fs(*c) for z in (1, 2) for c in combinations(alphabet, z)]
    n = 0
    for k in (1, 2, 3):
        def rec(prefix):
            global n
            if len(prefix) == k:
                if umax(prefix) >= 22:
                    n += 1
                return
            for c in coins:
                rec(prefix + [c])
        rec([])
    print("patterns xi=22 K=3 Z=2:", n)
