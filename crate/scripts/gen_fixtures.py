#!/usr/bin/env python3
"""Regenerate the graph6 fixture files under crates/core/data/.

small_cubic.g6  every connected cubic graph on 4..12 vertices (1+2+5+19+85)
snarks.g6       snarks of order <= 26 built from Petersen by dot products,
                plus the flower snark J5
class1.g6       assorted 3-edge-colorable bridgeless cubic graphs

Requires networkx. Output is deterministic for a fixed seed.
"""
import itertools
import random
import sys
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "data"
EXPECTED_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def g6(g):
    return nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g), header=False).decode().strip()


def dedupe(graphs):
    buckets = {}
    out = []
    for g in graphs:
        # colour refinement cannot separate regular graphs; the spectrum can
        # usually tell them apart and isomorphism settles the rest
        key = tuple(round(x, 6) + 0.0 for x in sorted(nx.adjacency_spectrum(g).real))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out


def all_cubic(n, rng, samples):
    seen = []
    for _ in range(samples):
        g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
        if nx.is_connected(g):
            seen.append(g)
        if len(seen) > 4000:
            seen = dedupe(seen)
            if len(seen) == EXPECTED_COUNTS[n]:
                break
    seen = dedupe(seen)
    if len(seen) != EXPECTED_COUNTS[n]:
        sys.exit(f"n={n}: found {len(seen)} classes, expected {EXPECTED_COUNTS[n]}")
    return sorted(seen, key=g6)


def three_edge_colorable(g):
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    color = {}
    at = {v: [] for v in g}
    for e in edges:
        at[e[0]].append(e)
        at[e[1]].append(e)

    def go(i):
        if i == len(edges):
            return True
        u, v = edges[i]
        used = {color[f] for f in at[u] + at[v] if f in color}
        for c in range(3):
            if c not in used and (i > 0 or c == 0):
                color[edges[i]] = c
                if go(i + 1):
                    return True
                del color[edges[i]]
        return False

    return go(0)


def cyclically_4_edge_connected(g):
    """No edge cut of size <= 3 leaves a circuit on two sides."""
    g = nx.convert_node_labels_to_integers(g)
    n = g.number_of_nodes()
    edges = list(g.edges())

    def cyclic_sides(skip):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (a, b) in enumerate(edges):
            if i not in skip:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        verts, es = {}, {}
        for v in range(n):
            r = find(v)
            verts[r] = verts.get(r, 0) + 1
        for i, (a, b) in enumerate(edges):
            if i not in skip:
                r = find(a)
                es[r] = es.get(r, 0) + 1
        return sum(1 for r in verts if es.get(r, 0) >= verts[r])

    for k in (1, 2, 3):
        for cut in itertools.combinations(range(len(edges)), k):
            if cyclic_sides(set(cut)) >= 2:
                return False
    return True


def is_snark(g):
    return nx.girth(g) >= 5 and not three_edge_colorable(g) and cyclically_4_edge_connected(g)


def snark_candidates(graphs):
    """Cheap filters first; the cut check runs once per isomorphism class."""
    graphs = dedupe([g for g in graphs if nx.girth(g) >= 5])
    return [g for g in graphs if not three_edge_colorable(g) and cyclically_4_edge_connected(g)]


def petersen():
    return nx.petersen_graph()


def flower_j5():
    g = nx.Graph()
    k = 5
    for i in range(k):
        a, b, c, d = ("a", i), ("b", i), ("c", i), ("d", i)
        g.add_edges_from([(a, b), (a, c), (a, d), (b, ("b", (i + 1) % k))])
    ring = [("c", i) for i in range(k)] + [("d", i) for i in range(k)]
    for i in range(2 * k):
        g.add_edge(ring[i], ring[(i + 1) % (2 * k)])
    return nx.convert_node_labels_to_integers(g)


def dot_product(g, h, ab, cd, xy):
    g = nx.convert_node_labels_to_integers(g)
    h = nx.relabel_nodes(nx.convert_node_labels_to_integers(h), lambda v: ("h", v))
    (a, b), (c, d) = ab, cd
    x, y = (("h", xy[0]), ("h", xy[1]))
    x1, x2 = [w for w in h[x] if w != y]
    y1, y2 = [w for w in h[y] if w != x]
    out = nx.union(g, h)
    out.remove_edges_from([(a, b), (c, d)])
    out.remove_nodes_from([x, y])
    out.add_edges_from([(a, x1), (b, x2), (c, y1), (d, y2)])
    return nx.convert_node_labels_to_integers(out)


def dot_products(g, h, rng, tries):
    g = nx.convert_node_labels_to_integers(g)
    h = nx.convert_node_labels_to_integers(h)
    ge = list(g.edges())
    he = list(h.edges())
    out = []
    for _ in range(tries):
        ab, cd = rng.sample(ge, 2)
        if set(ab) & set(cd):
            continue
        if rng.random() < 0.5:
            cd = (cd[1], cd[0])
        xy = rng.choice(he)
        out.append(dot_product(g, h, ab, cd, xy))
    return out


def class1_graphs():
    gs = [
        nx.complete_graph(4),
        nx.complete_bipartite_graph(3, 3),
        nx.circular_ladder_graph(3),
        nx.circular_ladder_graph(5),
        nx.hypercube_graph(3),
        nx.heawood_graph(),
        nx.moebius_kantor_graph(),
        nx.dodecahedral_graph(),
        nx.desargues_graph(),
        nx.pappus_graph(),
        nx.truncated_tetrahedron_graph(),
        nx.frucht_graph(),
        nx.tutte_graph(),
        nx.LCF_graph(8, [3, -3], 4),
        nx.LCF_graph(14, [5, -5], 7),
    ]
    return [nx.convert_node_labels_to_integers(g) for g in gs]


def main():
    rng = random.Random(20150105)
    OUT.mkdir(parents=True, exist_ok=True)

    if "--keep-small" not in sys.argv:
        small = []
        for n in sorted(EXPECTED_COUNTS):
            small += all_cubic(n, rng, 400000)
        (OUT / "small_cubic.g6").write_text("".join(g6(g) + "\n" for g in small))
        print(f"small_cubic.g6: {len(small)} graphs")

    p = petersen()
    order18 = snark_candidates(dot_products(p, p, rng, 400))
    order26 = []
    for g18 in order18:
        order26 += dot_products(p, g18, rng, 1500)
        order26 += dot_products(g18, p, rng, 1500)
    order26 = snark_candidates(order26)
    rng.shuffle(order26)
    snarks = [p] + order18 + [flower_j5()] + sorted(order26[:96], key=g6)
    for s in snarks:
        assert is_snark(s)
    (OUT / "snarks.g6").write_text("".join(g6(g) + "\n" for g in snarks))
    print(f"snarks.g6: {len(snarks)} graphs ({len(order18)} of order 18, {len(order26)} distinct of order 26 found)")

    c1 = class1_graphs()
    for g in c1:
        assert nx.is_connected(g) and nx.has_bridges(g) is False and three_edge_colorable(g), g
    (OUT / "class1.g6").write_text("".join(g6(g) + "\n" for g in c1))
    print(f"class1.g6: {len(c1)} graphs")


if __name__ == "__main__":
    main()
