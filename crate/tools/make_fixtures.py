#!/usr/bin/env python3
"""Generate the shipped edge-list fixtures and sanity-check them.

The two degree-regular square-complete graphs are transcribed from their
published drawings; the 15-vertex five-triangle graph follows its textual
construction. This script re-derives the structural facts (regularity,
square completeness, clique size) with an independent implementation
before the fixtures are trusted by anything else.
"""

import hashlib
import itertools
import os

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "crates", "core", "fixtures")

ELSPAS4 = [
    (0, 1), (0, 3), (0, 11), (0, 12), (1, 2), (1, 7), (1, 10), (2, 3),
    (2, 5), (2, 14), (3, 4), (3, 9), (4, 5), (4, 7), (4, 13), (5, 6),
    (5, 11), (6, 7), (6, 9), (6, 12), (7, 8), (8, 9), (8, 11), (8, 14),
    (9, 10), (10, 11), (10, 13), (12, 13), (12, 14), (13, 14),
]

ELSPAS5 = [
    (0, 3), (0, 5), (0, 6), (0, 7), (0, 8), (1, 2), (1, 4), (1, 6),
    (1, 7), (1, 8), (2, 5), (2, 9), (2, 10), (2, 11), (3, 4), (3, 9),
    (3, 10), (3, 11), (4, 12), (4, 13), (4, 14), (5, 12), (5, 13),
    (5, 14), (6, 15), (6, 19), (6, 22), (7, 16), (7, 20), (7, 23),
    (8, 17), (8, 18), (8, 21), (9, 16), (9, 18), (9, 22), (10, 17),
    (10, 19), (10, 23), (11, 15), (11, 20), (11, 21), (12, 16),
    (12, 19), (12, 21), (13, 17), (13, 20), (13, 22), (14, 15),
    (14, 18), (14, 23), (15, 16), (15, 17), (16, 17), (18, 19),
    (18, 20), (19, 20), (21, 22), (21, 23), (22, 23),
]


def bk15():
    edges = []
    for t in range(5):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        edges += [(a, b), (a, c), (b, c)]
    for i in range(5):
        j = (i + 1) % 5
        for u in range(3 * i, 3 * i + 3):
            for v in range(3 * j, 3 * j + 3):
                edges.append((min(u, v), max(u, v)))
    return sorted(set(edges))


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        assert u != v and v not in adj[u], (u, v)
        adj[u].add(v)
        adj[v].add(u)
    return adj


def square_complete(n, edges):
    adj = adjacency(n, edges)
    for u, v in itertools.combinations(range(n), 2):
        if v in adj[u]:
            continue
        if not adj[u] & adj[v]:
            return False
    return True


def max_clique(n, edges):
    adj = adjacency(n, edges)
    best = 0
    for sub in itertools.combinations(range(n), 6):
        if all(v in adj[u] for u, v in itertools.combinations(sub, 2)):
            best = 6
            break
    if best == 6:
        for sub in itertools.combinations(range(n), 7):
            if all(v in adj[u] for u, v in itertools.combinations(sub, 2)):
                return ">=7"
    return best


def write(name, n, edges):
    edges = sorted((min(u, v), max(u, v)) for u, v in edges)
    path = os.path.join(FIXTURES, name)
    with open(path, "w") as fh:
        fh.write(f"{n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    with open(path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    print(f"{name}: sha256 = {digest}")


def check(name, n, edges, expect_degree):
    adj = adjacency(n, edges)
    degrees = sorted(len(a) for a in adj)
    assert degrees == [expect_degree] * n, (name, degrees)
    assert square_complete(n, edges), name
    print(f"{name}: {expect_degree}-regular on {n} vertices, square complete")


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    check("elspas4.edges", 15, ELSPAS4, 4)
    check("elspas5.edges", 24, ELSPAS5, 5)
    bk = bk15()
    assert len(bk) == 60
    adj = adjacency(15, bk)
    assert all(len(a) == 8 for a in adj)
    assert max_clique(15, bk) == 6
    print("bk15.edges: 8-regular on 15 vertices, clique number 6")
    write("elspas4.edges", 15, ELSPAS4)
    write("elspas5.edges", 24, ELSPAS5)
    write("bk15.edges", 15, bk)


if __name__ == "__main__":
    main()
