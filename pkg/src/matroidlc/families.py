"""Deterministic families of small matroids for verification sweeps."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations

from .matroid import Matroid, make_graphic, make_linear, make_uniform


def uniform_family(n_max: int) -> list[Matroid]:
    """``U(r, n)`` for ``0 <= r <= n <= n_max``, ordered by ``n`` then ``r``."""
    return [make_uniform(r, n) for n in range(n_max + 1) for r in range(n + 1)]


def canonical_form(vertices: int, edges) -> tuple:
    """Lexicographically smallest sorted edge list over all vertex relabelings."""
    best = None
    for perm in permutations(range(vertices)):
        form = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


@lru_cache(maxsize=None)
def _graph_forms(vertices: int, max_edges: int, multi_edges: int) -> tuple:
    simple = list(combinations(range(vertices), 2))
    forms = set()
    for m in range(min(max_edges, len(simple)) + 1):
        for edges in combinations(simple, m):
            forms.add(canonical_form(vertices, edges))
    allpairs = [(u, v) for u in range(vertices) for v in range(u, vertices)]
    for m in range(1, min(multi_edges, max_edges) + 1):
        for edges in combinations_with_replacement(allpairs, m):
            if len(set(edges)) == m and all(u != v for u, v in edges):
                continue
            forms.add(canonical_form(vertices, edges))
    return tuple(sorted(forms, key=lambda f: (len(f), f)))


def graphic_family(max_vertices: int, max_edges: int | None = None, multi_edges: int = 0) -> list[Matroid]:
    """Cycle matroids of pairwise non-isomorphic graphs on ``max_vertices`` vertices.

    All simple graphs with at most ``max_edges`` edges are included, plus
    multigraphs (loops, parallel edges) with at most ``multi_edges``
    edges.  Graphs with isolated vertices stand in for smaller graphs.
    Isomorphism is decided by brute-force canonical labelling.
    """
    if max_edges is None:
        max_edges = max_vertices * (max_vertices - 1) // 2
    out = []
    for form in _graph_forms(max_vertices, max_edges, multi_edges):
        M = make_graphic(max_vertices, form)
        out.append(M)
    return out


def random_linear_family(count: int, n_max: int, seed: int = 0, p: int = 2, max_rows: int = 4) -> list[Matroid]:
    """``count`` seeded random column matroids over GF(p) with ``1 <= n <= n_max``."""
    rng = random.Random(seed)
    out = []
    for idx in range(count):
        n = rng.randint(1, n_max)
        rows = rng.randint(1, max_rows)
        matrix = [[rng.randrange(p) for _ in range(n)] for _ in range(rows)]
        M = make_linear(p, matrix)
        M.name = f"GF({p})#{seed}.{idx}" + str(matrix).replace(" ", "")
        out.append(M)
    return out


def sparse_graphic_nine() -> list[Matroid]:
    """A few graphic matroids on 9 edges with low density."""
    cycle9 = [(i, (i + 1) % 9) for i in range(9)]
    three_triangles = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)]
    prism_path = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4)]
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    return [
        make_graphic(9, cycle9),
        make_graphic(7, three_triangles),
        make_graphic(8, prism_path),
        make_graphic(6, k33),
    ]
