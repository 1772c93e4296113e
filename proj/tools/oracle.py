#!/usr/bin/env python3
# Independent reference implementation used to freeze expected values for the
# C++ unit tests. Deliberately naive: everything is sets, dicts and bitmask
# enumeration. Run it and paste the numbers; do not import it from anything.

import itertools
import sys


def parity(x):
    return bin(x).count("1") & 1


class Form:
    """n x n bilinear form over GF(2), rows[i] = bitmask of Omega(e_i, e_j)."""

    def __init__(self, n):
        self.n = n
        self.rows = [0] * n

    def set(self, i, j, val=1, both=True):
        if val:
            self.rows[i] |= 1 << j
            if both:
                self.rows[j] |= 1 << i
        return self

    def pair(self, u, v):
        acc = 0
        x = u
        while x:
            i = (x & -x).bit_length() - 1
            acc ^= parity(self.rows[i] & v)
            x &= x - 1
        return acc


def transvect(form, a, x):
    return x ^ (a if form.pair(x, a) else 0)


def orbit(form, gens, x):
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for b in gens:
                z = transvect(form, b, y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def orbit_partition(form, gens, domain):
    left = set(domain)
    classes = []
    while left:
        x = min(left)
        o = orbit(form, gens, x)
        classes.append(o)
        left -= o
    return classes


def radical(form, gens, domain):
    return {x for x in domain if all(form.pair(x, b) == 0 for b in gens)}


def q_value(form, x):
    """Q_B for B = standard basis: popcount + sum of Omega over support pairs."""
    sup = [i for i in range(form.n) if (x >> i) & 1]
    q = len(sup) & 1
    for i, j in itertools.combinations(sup, 2):
        q ^= form.pair(1 << i, 1 << j)
    return q


def symplectic_pairs(form, vecs):
    vecs = list(vecs)
    pairs, rad = [], []
    while vecs:
        u = vecs.pop(0)
        partner = next((v for v in vecs if form.pair(u, v)), None)
        if partner is None:
            rad.append(u)
            continue
        vecs.remove(partner)
        vecs = [w ^ (u if form.pair(w, partner) else 0) ^ (partner if form.pair(w, u) else 0)
                for w in vecs]
        pairs.append((u, partner))
    return pairs, rad


def arf(form):
    pairs, rad = symplectic_pairs(form, [1 << i for i in range(form.n)])
    assert all(q_value(form, h) == 0 for h in rad), "Arf undefined"
    return sum(q_value(form, e) * q_value(form, f) for e, f in pairs) & 1


def graph_form(n, edges):
    f = Form(n)
    for i, j in edges:
        f.set(i, j)
    return f


# ---- fixture builders (adjacency index lists) ----

def broom(m, k):
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(m - 1, m + j) for j in range(k)]
    return m + k, edges


def e6_edges():
    return 6, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 2)]


def janssen_a(n, p):
    assert n >= 3
    edges = [(i, i + 1) for i in range(1, 2 * n - 2)]      # chain a2..a_{2n-1}
    edges.append((0, 3))                                   # a1 - a4
    edges += [(2 * n - 2, 2 * n - 2 + j) for j in range(1, p + 2)]
    return 2 * n + p, edges


def janssen_b(n, p):
    assert n >= 4
    edges = [(i, i + 1) for i in range(2, 2 * n - 2)]      # chain a3..a_{2n-1}
    edges += [(5, 1), (1, 0)]                              # a6 - a2 - a1
    edges += [(2 * n - 2, 2 * n - 2 + j) for j in range(1, p + 2)]
    return 2 * n + p, edges


def janssen_c(n, p):
    assert n >= 3 and p >= 1
    edges = [(i, i + 1) for i in range(1, 2 * n - 1)]      # chain a2..a_{2n}
    edges.append((0, 4))                                   # a1 - a5
    edges += [(2 * n - 1, 2 * n - 1 + j) for j in range(1, p + 1)]
    return 2 * n + p, edges


def cycle(r):
    return r, [(i, (i + 1) % r) for i in range(r)]


def fig_ex():
    # labels b1..b6 (0..5), v1..v4 (6..9)
    b = list(range(6))
    v = [6, 7, 8, 9]
    E = [(v[0], b[0]), (b[0], b[4]), (v[2], b[2]), (v[1], b[1]), (b[1], b[5]),
         (v[3], b[3]), (b[0], b[2]), (b[0], v[2]), (b[1], b[3]), (b[1], b[2]),
         (b[1], v[3]), (b[1], v[2]), (b[2], b[4]), (b[2], b[5]), (b[3], b[5])]
    return 10, E


def fig_exx_form():
    # labels b1..b6 (0..5), v1..v3 (6..8); R = {b1,b2,b4,b5,v1,v2}, L = {b3,b6,v3}
    f = Form(9)
    sym = [(6, 0), (0, 3), (7, 1), (1, 4), (0, 7), (0, 1), (1, 3), (3, 4),  # within R
           (8, 2), (2, 5)]                                                  # within L
    arcs = [(8, 1), (2, 1), (2, 4), (5, 4)]                                 # L -> R only
    for i, j in sym:
        f.set(i, j)
    for i, j in arcs:
        f.set(i, j, both=False)
    return f


def d_min(form, gens, x, delta):
    ds = sorted(delta)
    for s in range(1, form.n + 1):
        for combo in itertools.combinations(ds, s):
            acc = 0
            ok = True
            for a, c in itertools.combinations(combo, 2):
                if form.pair(a, c):
                    ok = False
                    break
            if not ok:
                continue
            for c in combo:
                acc ^= c
            if acc == x:
                return s
    return None


def show(mask, names):
    sup = [names[i] for i in range(len(names)) if (mask >> i) & 1]
    return "+".join(sup) if sup else "0"


def main():
    print("== edge graph (2 vertices) ==")
    f = graph_form(2, [(0, 1)])
    print("orbit(b1):", sorted(orbit(f, [1, 2], 1)))
    print("arf:", arf(f))

    print("\n== triangle ==")
    f = graph_form(3, [(0, 1), (1, 2), (0, 2)])
    gens = [1, 2, 4]
    dom = range(8)
    cls = orbit_partition(f, gens, dom)
    print("classes:", sorted((len(c), min(c)) for c in cls))
    delta = orbit(f, gens, 1)
    print("delta size:", len(delta), "d(a+b+c):", d_min(f, gens, 7, delta))

    print("\n== E6 ==")
    n, E = e6_edges()
    f = graph_form(n, E)
    gens = [1 << i for i in range(n)]
    delta = orbit(f, gens, 1)
    print("delta (orbit of x1) size:", len(delta))
    q0 = [x for x in range(1, 64) if q_value(f, x) == 0]
    q1 = [x for x in range(64) if q_value(f, x) == 1]
    print("|Q=1|:", len(q1), " |Q=0, x!=0|:", len(q0))
    print("arf:", arf(f), " radical dim:", len(radical(f, gens, range(64))).bit_length() - 1)
    pairs, rad = symplectic_pairs(f, gens)
    print("symplectic pairs:", len(pairs), "radical part:", len(rad))
    cls = orbit_partition(f, gens, range(64))
    print("orbit classes of V:", [(len(c), min(c)) for c in cls])

    print("\n== D(4,1): d values ==")
    n, E = broom(4, 1)
    f = graph_form(n, E)
    gens = [1 << i for i in range(n)]
    delta = orbit(f, gens, 1)
    x = 0b00101  # a1+a3
    print("d(a1+a3):", d_min(f, gens, x, delta), " x in delta:", x in delta)

    print("\n== D(3,2): partition of 2^5, minimal rep scan ==")
    n, E = broom(3, 2)
    f = graph_form(n, E)
    gens = [1 << i for i in range(n)]
    cls = orbit_partition(f, gens, range(32))
    print("classes:", [(len(c), min(c)) for c in cls])
    v0 = radical(f, gens, range(32))
    print("V0:", sorted(v0))
    delta = orbit(f, gens, 1)
    v000 = {y for y in v0 if any((y ^ x1) in delta for x1 in delta)} | {0}
    print("V000:", sorted(v000))
    # x = a1+c1+c2 -> scan x+V000 for a rep whose support holds no nonzero V000 vec
    x = 0b11001
    names = ["a1", "a2", "a3", "c1", "c2"]
    for u in sorted(v000):
        cand = x ^ u
        bad = any(w and (w & cand) == w for w in v000)
        print("  cand", show(cand, names), "ok" if not bad else "contains V000 vec")

    print("\n== broom count table (m=2..6, k=1..4) ==")
    for m in range(2, 7):
        for k in range(1, 5):
            n, E = broom(m, k)
            f = graph_form(n, E)
            gens = [1 << i for i in range(n)]
            dom = range(1 << n)
            cls = orbit_partition(f, gens, dom)
            fixed = sum(1 for c in cls if len(c) == 1)
            moving = len(cls) - fixed
            print(f"  D({m},{k}): fixed={fixed} moving={moving}")

    print("\n== janssen arf parities ==")
    for n in (3, 4, 5):
        d, E = janssen_a(n, 0)
        print(f"  A(n={n},p=0): arf={arf(graph_form(d, E))}")
    for n in (4, 5):
        d, E = janssen_b(n, 0)
        print(f"  B(n={n},p=0): arf={arf(graph_form(d, E))}")
    for n, p in ((3, 1), (3, 2), (4, 1)):
        d, E = janssen_a(n, p)
        print(f"  A(n={n},p={p}): arf={arf(graph_form(d, E))}")

    print("\n== janssen two-orbit checks (dim<=8 sample) ==")
    for tag, (d, E) in (("A(3,1)", janssen_a(3, 1)), ("B(4,0)", janssen_b(4, 0)),
                        ("C(3,1)", janssen_c(3, 1)), ("C(3,2)", janssen_c(3, 2))):
        f = graph_form(d, E)
        gens = [1 << i for i in range(d)]
        v0 = radical(f, gens, range(1 << d))
        cls = orbit_partition(f, gens, set(range(1 << d)) - v0)
        qs = [sorted({q_value(f, x) for x in c}) for c in cls]
        print(f"  {tag}: dimV0={len(v0).bit_length()-1} classes off V0:",
              [(len(c), q) for c, q in zip(cls, qs)])

    print("\n== cycles ==")
    for r in (4, 5):
        d, E = cycle(r)
        f = graph_form(d, E)
        gens = [1 << i for i in range(d)]
        v0 = radical(f, gens, range(1 << d))
        delta = orbit(f, gens, 1)
        v000 = sorted({y for y in v0 if any((y ^ x1) in delta for x1 in delta)} | {0})
        cls = orbit_partition(f, gens, range(1 << d))
        print(f"  C{r}: V0={sorted(v0)} V000={v000} classes={[(len(c), min(c)) for c in cls]}")

    print("\n== V0/V00/V000 dims for D(6,2), D(8,2), D(2,2) ==")
    for m, k in ((6, 2), (8, 2), (2, 2)):
        n, E = broom(m, k)
        f = graph_form(n, E)
        gens = [1 << i for i in range(n)]
        dom = range(1 << n)
        v0 = radical(f, gens, dom)
        v00 = {y for y in v0 if q_value(f, y) == 0}
        delta = orbit(f, gens, 1)
        v000 = {y for y in v0 if any((y ^ x1) in delta for x1 in delta)} | {0}
        dims = tuple(len(s).bit_length() - 1 for s in (v0, v00, v000))
        print(f"  D({m},{k}): dim V0={dims[0]} V00={dims[1]} V000={dims[2]}")

    print("\n== fig-ex ==")
    n, E = fig_ex()
    f = graph_form(n, E)
    gens = [1 << i for i in range(6)]
    names = ["b1", "b2", "b3", "b4", "b5", "b6", "v1", "v2", "v3", "v4"]
    cls = orbit_partition(f, gens, range(1 << n))
    print("total classes:", len(cls))
    U = [x for x in range(1 << 6)]
    fixedU = [x for x in U if all(f.pair(x, b) == 0 for b in gens)]
    print("fixed in U:", [show(x, names) for x in sorted(fixedU)])
    clsU = orbit_partition(f, gens, U)
    print("classes in U:", [(len(c), show(min(c), names)) for c in clsU])
    v1 = 1 << 6
    clsV1 = orbit_partition(f, gens, [v1 ^ u for u in U])
    print("classes in v1+U:", [(len(c), show(min(c), names)) for c in clsV1])
    # per-coset class counts over span{v1..v4}
    for vm in range(16):
        v = (vm & 1) << 6 | (vm >> 1 & 1) << 7 | (vm >> 2 & 1) << 8 | (vm >> 3 & 1) << 9
        cs = orbit_partition(f, gens, [v ^ u for u in U])
        print(f"  coset {show(v, names)}: {len(cs)} classes, sizes {sorted(len(c) for c in cs)}")

    print("\n== fig-exx ==")
    f = fig_exx_form()
    gens = [1 << i for i in range(6)]
    names = ["b1", "b2", "b3", "b4", "b5", "b6", "v1", "v2", "v3"]
    cls = orbit_partition(f, gens, range(1 << 9))
    print("total classes:", len(cls))
    fixed = [x for x in range(1 << 9) if all(f.pair(x, b) == 0 for b in gens)]
    print("fixed count:", len(fixed))
    sizes = sorted(len(c) for c in cls)
    print("class sizes:", sizes)
    for c in cls:
        if len(c) == 48:
            print("  48-class rep:", show(min(c), names))

    print("\n== move classes of connected graphs, n=2..6 ==")

    def move_classes(n):
        idx = {}
        pos = 0
        pairmap = {}
        for i in range(n):
            for j in range(i + 1, n):
                pairmap[(i, j)] = pos
                pos += 1
        m = pos

        def adj_rows(mask):
            rows = [0] * n
            for (i, j), p in pairmap.items():
                if (mask >> p) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            return rows

        def mask_of(rows):
            mask = 0
            for (i, j), p in pairmap.items():
                if (rows[i] >> j) & 1:
                    mask |= 1 << p
            return mask

        def connected(rows):
            seen = 1
            stack = [0]
            while stack:
                v = stack.pop()
                nb = rows[v] & ~seen
                while nb:
                    w = (nb & -nb).bit_length() - 1
                    seen |= 1 << w
                    stack.append(w)
                    nb &= nb - 1
            return seen == (1 << n) - 1

        perm_tbl = []
        for p in itertools.permutations(range(n)):
            src = [0] * m
            for (i, j), q in pairmap.items():
                a, b = p[i], p[j]
                if a > b:
                    a, b = b, a
                src[q] = pairmap[(a, b)]
            perm_tbl.append(src)
        canon_memo = {}

        def canon(mask):
            hit = canon_memo.get(mask)
            if hit is not None:
                return hit
            best = None
            for src in perm_tbl:
                pm = 0
                for q in range(m):
                    if (mask >> src[q]) & 1:
                        pm |= 1 << q
                if best is None or pm < best:
                    best = pm
            canon_memo[mask] = best
            return best

        conn = [m_ for m_ in range(1 << m) if connected(adj_rows(m_))]
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        seen_global = set()
        for start in conn:
            if start in seen_global:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for g in frontier:
                    rows = adj_rows(g)
                    for c in range(n):
                        for a in range(n):
                            if a == c or not ((rows[c] >> a) & 1):
                                continue
                            r2 = list(rows)
                            r2[c] = (rows[c] ^ rows[a]) & ~(1 << c)
                            for x in range(n):
                                if x != c:
                                    r2[x] = (r2[x] & ~(1 << c)) | ((1 << c) if (r2[c] >> x) & 1 else 0)
                            g2 = mask_of(r2)
                            if g2 not in comp:
                                comp.add(g2)
                                nxt.append(g2)
                frontier = nxt
            seen_global |= comp
            canons = {canon(g) for g in comp}
            for c_ in canons:
                parent.setdefault(c_, c_)
            first = next(iter(canons))
            for c_ in canons:
                parent[find(c_)] = find(first)
        iso = {canon(g) for g in conn}
        return len(iso), len({find(c_) for c_ in iso})

    for n in range(2, 7):
        iso, ncls = move_classes(n)
        print(f"  n={n}: {iso} iso classes, {ncls} move classes")


if __name__ == "__main__":
    sys.setrecursionlimit(100000)
    main()
