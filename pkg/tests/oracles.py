"""Brute-force reference computations for the test suite.

Everything here works on plain adjacency lists with Python loops and shares
no code with the package, so agreement is evidence rather than tautology.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations


def adjacency_lists(adj) -> list[list[int]]:
    n = len(adj)
    return [[j for j in range(n) if adj[i][j]] for i in range(n)]


def bfs(nbrs: list[list[int]], src: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(nbrs)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_distances(nbrs):
    return [bfs(nbrs, s) for s in range(len(nbrs))]


def common(nbrs, x, y) -> int:
    return len(set(nbrs[x]) & set(nbrs[y]))


def amply_params(nbrs):
    """(v, k, lambda, mu) by direct pair enumeration, or None."""
    n = len(nbrs)
    dist = all_distances(nbrs)
    degs = {len(a) for a in nbrs}
    if len(degs) != 1:
        return None
    lams, mus = set(), set()
    for x, y in combinations(range(n), 2):
        if dist[x][y] == 1:
            lams.add(common(nbrs, x, y))
        elif dist[x][y] == 2:
            mus.add(common(nbrs, x, y))
    if len(lams) > 1 or len(mus) != 1:
        return None
    return (n, degs.pop(), lams.pop() if lams else 0, mus.pop())


SIGS = [(0, 4), (1, 3), (2, 2), (3, 1), (3, 3), (4, 0)]


def signature_quotients(nbrs):
    """For every base vertex, the neighbour-count table over the six signature
    cells (None if some cell is not equitable)."""
    dist = all_distances(nbrs)
    n = len(nbrs)
    out = []
    for x in range(n):
        far = [y for y in range(n) if dist[x][y] == 4]
        assert len(far) == 1
        xp = far[0]
        cell = {y: SIGS.index((dist[x][y], dist[xp][y])) for y in range(n)}
        sizes = [sum(1 for y in range(n) if cell[y] == i) for i in range(6)]
        rows = []
        for i in range(6):
            seen = set()
            for y in range(n):
                if cell[y] != i:
                    continue
                counts = [0] * 6
                for z in nbrs[y]:
                    counts[cell[z]] += 1
                seen.add(tuple(counts))
            rows.append(seen.pop() if len(seen) == 1 else None)
        out.append((tuple(sizes), tuple(rows)))
    return out


def squares_mod(p: int) -> set[int]:
    return {(y * y) % p for y in range(1, p)}


def multiplicative_order(a: int, p: int) -> int:
    k, x = 1, a % p
    while x != 1:
        x = (x * a) % p
        k += 1
    return k
