"""Independent reference computations used to freeze expected values in the C++ tests.

Plain Python + networkx, deliberately sharing no code with the C++ library.
Run: python3 tests/oracles/oracle.py
"""
import itertools
import random

import networkx as nx


def gn_vertex_index(a, b, j, n):
    return (2 * a + b) * 2 * n + (j % (2 * n))


def gn_neighbors(a, b, j, n, fifth_uses_c=False):
    c = (a + b) % 2
    na, nb = 1 - a, 1 - b
    m = 2 * n
    fifth_b = c if fifth_uses_c else b
    return {
        (na, nb, j % m),
        (a, nb, j % m),
        (a, c, (j - 1) % m),
        (a, c, (j + 1) % m),
        (na, fifth_b, (j + 2 * (-1) ** a) % m),
    }


def build_gn(n, fifth_uses_c=False):
    g = nx.Graph()
    verts = [(a, b, j) for a in (0, 1) for b in (0, 1) for j in range(2 * n)]
    g.add_nodes_from(verts)
    for v in verts:
        for u in gn_neighbors(*v, n, fifth_uses_c):
            g.add_edge(v, u)
    return g


def symmetric(n, fifth_uses_c):
    verts = [(a, b, j) for a in (0, 1) for b in (0, 1) for j in range(2 * n)]
    for v in verts:
        for u in gn_neighbors(*v, n, fifth_uses_c):
            if v not in gn_neighbors(*u, n, fifth_uses_c):
                return False
    return True


def induced_path_ok(g, seq):
    if len(set(seq)) != len(seq):
        return False
    for i in range(len(seq)):
        for k in range(i + 1, len(seq)):
            adj = g.has_edge(seq[i], seq[k])
            if adj != (k == i + 1):
                return False
    return True


def brute_longest(g):
    """Longest induced path by plain enumeration of adjacency-extended sequences."""
    best = 0 if g.number_of_nodes() == 0 else 1
    stack = [[v] for v in g.nodes]
    while stack:
        seq = stack.pop()
        if induced_path_ok(g, seq):
            best = max(best, len(seq))
            for u in g.neighbors(seq[-1]):
                if u not in seq:
                    stack.append(seq + [u])
    return best


def has_induced_path(g, k):
    stack = [[v] for v in g.nodes]
    while stack:
        seq = stack.pop()
        if not induced_path_ok(g, seq):
            continue
        if len(seq) == k:
            return True
        for u in g.neighbors(seq[-1]):
            if u not in seq:
                stack.append(seq + [u])
    return False


def perm_f(n):
    return lambda v: (v[0], v[1], (v[2] + 1) % (2 * n))


def perm_p(n):
    def p(v):
        a, b, j = v
        if j % 2 == 0:
            return (1 - a, b, (-j - 1) % (2 * n))
        return (1 - a, 1 - b, (-j - 1) % (2 * n))
    return p


def perm_q(n):
    def q(v):
        a, b, j = v
        return (a, (a + b) % 2, (-j + 2 * a) % (2 * n))
    return q


def perm_pinv(n):
    def pinv(v):
        a, b, j = v
        if j % 2 == 0:
            return (1 - a, 1 - b, (-j - 1) % (2 * n))
        return (1 - a, b, (-j - 1) % (2 * n))
    return pinv


def perm_r(n):
    m = 2 * n
    A = set()
    for j in (0, 1):
        A |= {(0, 0, j), (0, 1, j), (1, 0, (j + 1) % m), (1, 1, (j + 1) % m)}
    q, f, pinv = perm_q(n), perm_f(n), perm_pinv(n)
    return lambda v: q(v) if v in A else f(f(pinv(v)))


def is_auto(g, fn):
    return all(g.has_edge(fn(u), fn(v)) for u, v in g.edges) and len({fn(v) for v in g}) == len(g)


def orbit_count(elements, act, gens):
    parent = {e: e for e in elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in elements:
        for gfn in gens:
            parent[find(e)] = find(act(gfn, e))
    return len({find(e) for e in elements})


def canonical_set(n):
    s = set()
    for i in range(n):
        s |= {(0, 0, 2 * i), (0, 1, 2 * i)}
    for i in range(0, -(-n // 2) - 1):
        s |= {(0, 1, 4 * i + 1), (0, 0, 4 * i + 3)}
    if n % 2 == 0:
        s.add((0, 1, 2 * n - 3))
    return s


def is_path_set(g, s):
    h = g.subgraph(s)
    return nx.is_connected(h) and h.number_of_edges() == len(s) - 1 and max(d for _, d in h.degree) <= 2


def f16_mul(x, y):
    r = 0
    for i in range(4):
        if (y >> i) & 1:
            r ^= x << i
    for i in range(7, 3, -1):
        if (r >> i) & 1:
            r ^= 0b10011 << (i - 4)
    return r


def union_nonedge_orbits(n, k):
    """Non-edge orbits of k copies of G_n under diagonal f,p,q,r plus copy swap/rotation."""
    g = build_gn(n)
    verts = sorted(g.nodes)
    idx = {v: i for i, v in enumerate(verts)}
    size = len(verts)

    def lift(fn):
        return lambda x: (x // size) * size + idx[fn(verts[x % size])]

    perms = [lift(fn) for fn in (perm_f(n), perm_p(n), perm_q(n), perm_r(n))]
    perms.append(lambda x: ((x // size) ^ 1 if x // size < 2 else x // size) * size + x % size)
    perms.append(lambda x: ((x // size + 1) % k) * size + x % size)
    edges = set()
    for u, v in g.edges:
        for c in range(k):
            edges.add(tuple(sorted((c * size + idx[u], c * size + idx[v]))))
    nonedges = [e for e in itertools.combinations(range(k * size), 2) if e not in edges]
    act = lambda fn, e: tuple(sorted((fn(e[0]), fn(e[1]))))
    return len(nonedges), orbit_count(nonedges, act, perms)


def main():
    print("neighborhood symmetric (fifth=(a-bar,c))  n=2..8:", all(symmetric(n, True) for n in range(2, 9)))
    print("neighborhood symmetric (fifth=(a-bar,b))  n=2..8:", all(symmetric(n, False) for n in range(2, 9)))
    for n in range(2, 7):
        g = build_gn(n)
        fs = [perm_f(n), perm_p(n), perm_q(n), perm_pinv(n), perm_r(n)]
        print(f"G_{n}: edges={g.number_of_edges()} autos={[is_auto(g, x) for x in fs]}")
    n = 2
    g = build_gn(2)
    gens = [perm_f(n), perm_p(n), perm_q(n), perm_r(n)]
    verts = list(g.nodes)
    nonedges = [tuple(sorted(e)) for e in itertools.combinations(sorted(verts), 2) if not g.has_edge(*e)]
    edges = [tuple(sorted(e)) for e in g.edges]
    pair_act = lambda fn, e: tuple(sorted((fn(e[0]), fn(e[1]))))
    print("G2 nonedges:", len(nonedges), "orbits under f,p,q,r:", orbit_count(nonedges, pair_act, gens))
    print("G2 edge orbits under f,p,q,r:", orbit_count(edges, pair_act, gens))
    for n in (3, 4):
        g = build_gn(n)
        gens = [perm_f(n), perm_p(n), perm_q(n), perm_r(n)]
        verts = sorted(g.nodes)
        nonedges = [e for e in itertools.combinations(verts, 2) if not g.has_edge(*e)]
        edges = [tuple(sorted(e)) for e in g.edges]
        print(f"G{n} edge orbits {orbit_count(edges, pair_act, gens)}, nonedge orbits {orbit_count(nonedges, pair_act, gens)}")

    print("G2*3 nonedges, orbits:", union_nonedge_orbits(2, 3))
    print("Petersen brute longest:", brute_longest(nx.petersen_graph()))
    print("C6 brute longest:", brute_longest(nx.cycle_graph(6)))
    print("K5 brute longest:", brute_longest(nx.complete_graph(5)))
    print("G2 brute longest:", brute_longest(build_gn(2)))
    print("Heawood brute longest:", brute_longest(nx.heawood_graph()))

    for n in range(2, 11):
        s = canonical_set(n)
        assert len(s) == 3 * n - 1, (n, len(s))
        assert is_path_set(build_gn(n), s), n
    print("canonical sets n=2..10 induce paths")

    for n in range(2, 9):
        g = build_gn(n)
        m = 2 * n
        for w in [(0, 1, 0), (0, 0, m - 1)]:
            h = g.copy()
            h.remove_edge((0, 0, 0), w)
            s = canonical_set(n)
            if n % 2 == 0:
                s = s | {(0, 0, m - 1)}
            else:
                extra = (1, 1, 0) if w == (0, 1, 0) else (1, 1, m - 1)
                s = (s | {(0, 0, m - 1), extra}) - {(0, 1, m - 2)}
            print(f"deletion fixture n={n} w={w}: size={len(s)} path={is_path_set(h, s)}")

    # F16 cubes
    alpha = 0b0010
    cubes = sorted({f16_mul(f16_mul(x, x), x) for x in range(1, 16)})
    print("F16 cubes:", cubes, "expected", sorted([1, 8, 8 | 2, 8 | 4, 15]))
    print("alpha^4 =", f16_mul(f16_mul(alpha, alpha), f16_mul(alpha, alpha)))
    raty = nx.Graph()
    raty.add_nodes_from(range(16))
    for a in range(16):
        for b in range(a + 1, 16):
            if a ^ b in cubes:
                raty.add_edge(a, b)
    qd4 = nx.Graph()
    for a in range(16):
        for b in range(a + 1, 16):
            d = bin(a ^ b).count("1")
            if d in (1, 4):
                qd4.add_edge(a, b)
    g2 = build_gn(2)
    print("raty~G2", nx.is_isomorphic(raty, g2), "qd4~G2", nx.is_isomorphic(qd4, g2))

    # random graph oracle sample (seeded) just to sanity-check brute vs has_induced_path
    rng = random.Random(7)
    for _ in range(5):
        gg = nx.gnp_random_graph(10, 0.3, seed=rng.randrange(1 << 30))
        L = brute_longest(gg)
        assert has_induced_path(gg, L) and not has_induced_path(gg, L + 1)
    print("random sanity ok")

    # Negative-control candidates for P4: all graphs on <= 5 vertices
    count = 0
    for order in range(2, 6):
        pairs = list(itertools.combinations(range(order), 2))
        for mask in range(1 << len(pairs)):
            gg = nx.Graph()
            gg.add_nodes_from(range(order))
            gg.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
            if has_induced_path(gg, 4):
                continue
            ok = True
            for p in pairs:
                h = gg.copy()
                if h.has_edge(*p):
                    h.remove_edge(*p)
                else:
                    h.add_edge(*p)
                if not has_induced_path(h, 4):
                    ok = False
                    break
            count += ok
    print("P4-saturated graphs on 2..5 vertices (labelled):", count)


if __name__ == "__main__":
    main()
