"""Shared test helpers: independent brute-force references.

Everything here recomputes facts from raw adjacency only, so the tested
code paths (path/seq logic, canonical codes, view machinery) have an
independent oracle to be checked against.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

import pytest

from anontree.tree import PortTree


def brute_distances(tree: PortTree) -> list[list[int]]:
    n = tree.n
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in tree.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        out.append(dist)
    return out


def brute_diameter(tree: PortTree) -> int:
    return max(max(row) for row in brute_distances(tree))


def brute_path(tree: PortTree, a: int, b: int) -> list[int]:
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w, _ in tree.adj[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def brute_automorphisms(tree: PortTree):
    """All port-preserving automorphisms.

    Ports make the structure rigid: the image of one node forces every
    other image by following equal ports, so trying each image of node 0
    and propagating enumerates the whole group.
    """
    n = tree.n
    autos = []
    for image in range(n):
        mapping = {0: image}
        queue = [0]
        ok = True
        while queue and ok:
            v = queue.pop()
            fv = mapping[v]
            if tree.degree(v) != tree.degree(fv):
                ok = False
                break
            for p, (w, q) in enumerate(tree.adj[v]):
                fw, fq = tree.adj[fv][p]
                if fq != q:
                    ok = False
                    break
                if w in mapping:
                    if mapping[w] != fw:
                        ok = False
                        break
                else:
                    mapping[w] = fw
                    queue.append(w)
        if ok and len(mapping) == n and len(set(mapping.values())) == n:
            autos.append(mapping)
    return autos


def brute_is_symmetric(tree: PortTree) -> bool:
    autos = brute_automorphisms(tree)
    return any(any(f[v] != v for v in f) for f in autos)


def relabel(tree: PortTree, perm) -> PortTree:
    """The same tree with node indices permuted by perm."""
    maps = [dict() for _ in range(tree.n)]
    for v in range(tree.n):
        for p, (w, q) in enumerate(tree.adj[v]):
            maps[perm[v]][p] = (perm[w], q)
    return PortTree.from_port_maps(maps)


def random_relabel(tree: PortTree, seed: int) -> PortTree:
    rng = random.Random(seed)
    perm = list(range(tree.n))
    rng.shuffle(perm)
    return relabel(tree, perm)


def mirror_tree(tree: PortTree, root: int) -> PortTree:
    """Symmetric tree: two copies of ``tree`` joined by an edge at ``root``
    with equal fresh ports on both sides."""
    n = tree.n
    maps = [dict() for _ in range(2 * n)]
    for v in range(n):
        for p, (w, q) in enumerate(tree.adj[v]):
            maps[v][p] = (w, q)
            maps[n + v][p] = (n + w, q)
    d = tree.degree(root)
    maps[root][d] = (n + root, d)
    maps[n + root][d] = (root, d)
    return PortTree.from_port_maps(maps)


def all_balanced_walks(edges: int):
    """All down/up walks of a rooted tree with the given edge count."""
    if edges == 0:
        yield ()
        return
    for bits in itertools.product((0, 1), repeat=2 * edges):
        depth = 0
        ok = True
        for b in bits:
            depth += 1 if b == 0 else -1
            if depth < 0:
                ok = False
                break
        if ok and depth == 0:
            yield bits


def walk_degrees(phi) -> list[int]:
    """Degree of each node in first-visit order, from the walk alone."""
    child_count = [0]
    stack = [0]
    created = 0
    for b in phi:
        if b == 0:
            child_count[stack[-1]] += 1
            created += 1
            child_count.append(0)
            stack.append(created)
        else:
            stack.pop()
    return [c + (1 if i else 0) for i, c in enumerate(child_count)]


def all_rooted_port_trees(max_n: int):
    """Every rooted port-labelled tree with at most max_n nodes, as
    (phi, psi) pairs; entry ports range over the entered node's degree."""
    from anontree.tree import TreeCode

    for n in range(1, max_n + 1):
        for phi in all_balanced_walks(n - 1):
            degs = walk_degrees(phi)
            ranges = [range(degs[i]) for i in range(1, n)]
            for psi in itertools.product(*ranges):
                yield TreeCode(tuple(phi), tuple(psi))


@pytest.fixture(scope="session")
def small_random_trees():
    from anontree.generators import gen_random

    return [gen_random(n, seed) for n in (5, 9, 14, 20) for seed in range(4)]
