#!/usr/bin/env python3
"""Independent brute-force oracles used to derive the frozen expected values
in the C++ test suites. Pure Python, no shared code with the library.

Run: python3 tests/oracles/derive_values.py [section ...]
"""
import itertools
import math
import random
import sys
from fractions import Fraction


def has_cycle(n, arcs, verts):
    """DFS three-colour cycle detection restricted to `verts`."""
    vs = set(verts)
    succ = {v: [] for v in vs}
    for a, b in arcs:
        if a in vs and b in vs:
            succ[a].append(b)
    state = {v: 0 for v in vs}

    def dfs(u):
        state[u] = 1
        for w in succ[u]:
            if state[w] == 1:
                return True
            if state[w] == 0 and dfs(w):
                return True
        state[u] = 2
        return False

    return any(state[v] == 0 and dfs(v) for v in vs)


def orientations(edges):
    for bits in range(1 << len(edges)):
        yield [(u, v) if not (bits >> i) & 1 else (v, u) for i, (u, v) in enumerate(edges)]


def count_acyclic(n, edges):
    return sum(1 for arcs in orientations(edges) if not has_cycle(n, arcs, range(n)))


def min_cover(n, admissible):
    """Smallest number of admissible sets covering range(n), by trying k-colourings."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n):
            if all(admissible([v for v in range(n) if col[v] == c]) for c in range(k)):
                return k
    return n


def digraph_chi(n, arcs):
    return min_cover(n, lambda S: not has_cycle(n, arcs, S))


def covering_lp_scipy(n, sets):
    from scipy.optimize import linprog
    import numpy as np
    A = np.zeros((n, len(sets)))
    for j, S in enumerate(sets):
        for v in S:
            A[v, j] = 1
    res = linprog(np.ones(len(sets)), A_ub=-A, b_ub=-np.ones(n), bounds=(0, None), method="highs")
    return Fraction(res.fun).limit_denominator(1000)


def acyclic_sets(n, arcs):
    return [S for r in range(1, n + 1) for S in itertools.combinations(range(n), r)
            if not has_cycle(n, arcs, S)]


def section_core():
    K3 = [(0, 1), (0, 2), (1, 2)]
    C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
    print("acyclic(K3) =", count_acyclic(3, K3))
    print("acyclic(C4) =", count_acyclic(4, C4))
    print("acyclic(P3) =", count_acyclic(3, [(0, 1), (1, 2)]))
    # dichromatic numbers by exhaustive orientation enumeration
    for name, n, E in [("K3", 3, K3), ("C4", 4, C4), ("P4", 4, [(0, 1), (1, 2), (2, 3)])]:
        print("dichi(%s) =" % name, max(digraph_chi(n, arcs) for arcs in orientations(E)))
    paley = [(i, (i + d) % 7) for i in range(7) for d in (1, 2, 4)]
    print("chi(Paley7) =", digraph_chi(7, paley))
    tri = [(0, 1), (1, 2), (2, 0)]
    print("chif(directed triangle) =", covering_lp_scipy(3, acyclic_sets(3, tri)))
    c4 = [(0, 1), (1, 2), (2, 3), (3, 0)]
    print("chif(directed C4) =", covering_lp_scipy(4, acyclic_sets(4, c4)))
    print("chif(Paley7) =", covering_lp_scipy(7, acyclic_sets(7, paley)))
    for name, n, E in [("K3", 3, K3), ("C4", 4, C4)]:
        best = max(covering_lp_scipy(n, acyclic_sets(n, arcs)) for arcs in orientations(E))
        print("dichif(%s) =" % name, best)
    # K8 acyclic fraction against 1/16
    print("acyclic(K8)/2^28 =", Fraction(math.factorial(8), 2 ** 28), float(Fraction(math.factorial(8), 2 ** 28)))


def principal_sets(order, t, d, edges_of, kmax):
    n = len(order)
    out = []
    for k in range(1, kmax + 1):
        pool = order[:min(n, math.floor(t * k))]
        for S in itertools.combinations(pool, k):
            e = sum(1 for u, v in itertools.combinations(S, 2) if (min(u, v), max(u, v)) in edges_of)
            if Fraction(2 * e, k) >= d:
                out.append(S)
    return out


def section_orient():
    K3 = {(0, 1), (0, 2), (1, 2)}
    K4 = {(a, b) for a in range(4) for b in range(a + 1, 4)}
    for name, n, E, t, d in [("K3", 3, K3, Fraction(1), Fraction(2)), ("K4", 4, K4, Fraction(2), Fraction(3)),
                             ("K4t1", 4, K4, Fraction(1), Fraction(2))]:
        sets = principal_sets(list(range(n)), t, d, E, n)
        good = 0
        El = sorted(E)
        for arcs in orientations(El):
            if all(has_cycle(n, arcs, S) for S in sets):
                good += 1
        print("census %s t=%s d=%s: sets=%s certified=%d/%d" % (name, t, d, sets, good, 2 ** len(El)))
    # union bound at t=60 and t=8
    for t in (60, 8):
        d = 2 * math.log2(math.e * t * t)
        print("t=%d d=%.6f 2(d+1)=%.6f ok=%s" % (t, d, 2 * (d + 1), t >= 2 * (d + 1)))
    print("C(6,3)=", math.comb(6, 3), "(2e)^3=", (2 * math.e) ** 3)


def section_kneser():
    def kneser(n, k):
        V = list(itertools.combinations(range(1, n + 1), k))
        E = [(i, j) for i in range(len(V)) for j in range(i + 1, len(V)) if not set(V[i]) & set(V[j])]
        return V, E
    for n, k in [(5, 2), (4, 2)]:
        V, E = kneser(n, k)
        deg = [0] * len(V)
        for a, b in E:
            deg[a] += 1
            deg[b] += 1
        print("KG(%d,%d): |V|=%d |E|=%d degrees=%s" % (n, k, len(V), len(E), sorted(set(deg))))
    print("enl(1024) =", 1024 / (2 * math.log2(1024)))
    for n, k in [(200, 2), (48, 2)]:
        print("kneser_z(%d,%d) =" % (n, k), math.floor((n - 2 * k + 2) / (8 * math.log2(n / k))))
    for m, k in [(16, 1), (4, 2)]:
        print("blow-up condition m=%d k=%d:" % (m, k), 2 + 2 * math.log2(m) <= math.ceil(m / k))
    r, m = 4, 8
    print("blow-up failure bound r=4 m=8: 2^%d" % math.log2(2 ** (-r * r + 2 * r) * m ** (2 * r)))
    # Kneser power inequality families
    fam_a = {}
    for k in range(8, 41):
        r = k // 2
        x = r if k % 2 == 0 else r - 1
        m = math.comb(2 * r, x)
        q = math.floor(2 ** (k / 2 - 2))
        fam_a[k] = 2 + 2 * math.log2(m) <= math.ceil(m / q)
    print("family (a):", fam_a)
    fam_b = {}
    for k in range(7, 41):
        r = k // 2
        m = math.comb(r + 2, 4)
        q = (k + 1) // 8
        fam_b[k] = 2 + 2 * math.log2(m) <= math.ceil(m / q)
    print("family (b):", fam_b)
    for coef in (24, 32, 40):
        n = 18
        while n - 16 < coef * math.log2(n / 9):
            n += 1
        print("k=9 smallest n with n-16 >= %d log(n/9): %d" % (coef, n))
    print("floor(9*2^4.5) =", math.floor(9 * 2 ** 4.5))


def section_bucg(samples=3000, seed=12345):
    """Smallest t such that some sampled orientation of K_5^(2) makes every t-set cyclic."""
    n, k = 5, 2
    N = n * k
    edges = [(a, b) for a in range(N) for b in range(a + 1, N) if a // k != b // k]
    rnd = random.Random(seed)
    hist = {}
    for _ in range(samples):
        inn = [0] * N
        for a, b in edges:
            if rnd.getrandbits(1):
                inn[b] |= 1 << a
            else:
                inn[a] |= 1 << b
        acyc = [False] * (1 << N)
        acyc[0] = True
        best = 0
        for S in range(1, 1 << N):
            rem = S
            while rem:
                v = (rem & -rem).bit_length() - 1
                rem &= rem - 1
                if inn[v] & S == 0:
                    acyc[S] = acyc[S & ~(1 << v)]
                    break
            if acyc[S]:
                best = max(best, bin(S).count("1"))
        hist[best] = hist.get(best, 0) + 1
    print("K_5^(2) max-acyclic-set size histogram over %d samples:" % samples, dict(sorted(hist.items())))
    print("smallest t with every t-set cyclic in some sample:", min(hist) + 1)


if __name__ == "__main__":
    sections = sys.argv[1:] or ["core", "orient", "kneser", "bucg"]
    for s in sections:
        print("==", s)
        globals()["section_" + s]()
