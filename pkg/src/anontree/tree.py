"""Anonymous port-labelled trees.

A tree on n nodes is stored as per-node adjacency indexed by local port:
``tree.adj[v][p] == (w, q)`` means the edge {v, w} carries port p at v and
port q at w.  Ports at a node of degree d are exactly {0, ..., d-1}.  Node
indices are simulation bookkeeping only; nothing an election algorithm may
observe depends on them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class TreeError(Exception):
    pass


class ValidationError(TreeError):
    pass


class PortGapError(ValidationError):
    pass


class AsymmetricAdjacencyError(ValidationError):
    pass


class NotConnectedError(ValidationError):
    pass


class HasCycleError(ValidationError):
    pass


class PortTree:
    """Immutable port-labelled tree."""

    __slots__ = ("adj",)

    def __init__(self, adj: Sequence[Sequence[tuple[int, int]]]):
        self.adj: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple((int(w), int(q)) for (w, q) in entries) for entries in adj
        )

    @property
    def n(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbor(self, v: int, port: int) -> tuple[int, int]:
        """Endpoint and reverse port of the edge leaving v through ``port``."""
        return self.adj[v][port]

    def edges(self) -> Iterable[tuple[int, int, int, int]]:
        """Yield each edge once as (v, port_at_v, w, port_at_w) with v < w."""
        for v, entries in enumerate(self.adj):
            for p, (w, q) in enumerate(entries):
                if v < w:
                    yield (v, p, w, q)

    def __eq__(self, other) -> bool:
        return isinstance(other, PortTree) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"PortTree(n={self.n})"

    @classmethod
    def from_port_maps(cls, maps: Sequence[Mapping[int, tuple[int, int]]]) -> "PortTree":
        """Build and fully validate a tree from per-node {port: (nbr, rev)} maps."""
        adj = validate_port_maps(maps)
        return cls(adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int, int]]) -> "PortTree":
        """Build from (v, port_at_v, w, port_at_w) tuples, validating."""
        maps: list[dict[int, tuple[int, int]]] = [dict() for _ in range(n)]
        for v, p, w, q in edges:
            if p in maps[v] or q in maps[w]:
                raise PortGapError(f"duplicate port assignment at node {v if p in maps[v] else w}")
            maps[v][p] = (w, q)
            maps[w][q] = (v, p)
        return cls.from_port_maps(maps)


def validate_port_maps(maps: Sequence[Mapping[int, tuple[int, int]]]):
    """Check every PortTree invariant on raw port maps.

    Returns the port-indexed adjacency on success; raises the subclass of
    ValidationError naming the first offending node or edge otherwise.
    """
    n = len(maps)
    if n == 0:
        raise ValidationError("a tree has at least one node")
    adj: list[tuple[tuple[int, int], ...]] = []
    half_edges = 0
    for v in range(n):
        ports = sorted(maps[v])
        deg = len(ports)
        if ports != list(range(deg)):
            raise PortGapError(f"node {v} has ports {ports}, expected {list(range(deg))}")
        entries = []
        for p in ports:
            w, q = maps[v][p]
            if not (0 <= w < n):
                raise ValidationError(f"node {v} port {p} names unknown node {w}")
            back = maps[w].get(q)
            if back != (v, p):
                raise AsymmetricAdjacencyError(
                    f"node {v} port {p} -> ({w}, {q}) but node {w} port {q} -> {back}"
                )
            entries.append((w, q))
            half_edges += 1
        adj.append(tuple(entries))
    _check_connected_acyclic(n, adj, half_edges // 2)
    return adj


def validate(tree: PortTree) -> None:
    """Re-check invariants of an already-constructed tree."""
    maps = [{p: entry for p, entry in enumerate(entries)} for entries in tree.adj]
    validate_port_maps(maps)


def _check_connected_acyclic(n, adj, edge_count) -> None:
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for w, _ in adj[v]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    if reached < n:
        missing = seen.index(False)
        raise NotConnectedError(f"node {missing} is not reachable from node 0")
    if edge_count != n - 1:
        raise HasCycleError(f"{edge_count} edges on {n} nodes; a tree has {n - 1}")


# ---------------------------------------------------------------------------
# Paths and port sequences
# ---------------------------------------------------------------------------


def bfs_parents(tree: PortTree, root: int):
    """Parent, parent-entry-port-pair and depth arrays for the tree rooted at root.

    ``port_up[v]`` is the port at v leading toward the root and
    ``port_down[v]`` the reverse port on the parent side.
    """
    n = tree.n
    parent = [-1] * n
    port_up = [-1] * n
    port_down = [-1] * n
    depth = [0] * n
    order = [root]
    seen = [False] * n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for p, (w, q) in enumerate(tree.adj[v]):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                port_up[w] = q
                port_down[w] = p
                depth[w] = depth[v] + 1
                order.append(w)
                queue.append(w)
    return parent, port_up, port_down, depth, order


def path_nodes(tree: PortTree, a: int, b: int) -> list[int]:
    """The unique simple path from a to b, as a node list."""
    parent, _, _, _, _ = bfs_parents(tree, b)
    path = [a]
    v = a
    while v != b:
        v = parent[v]
        path.append(v)
    return path


def seq_of_path(tree: PortTree, path: Sequence[int]) -> tuple[int, ...]:
    """Full port sequence (outgoing, incoming, outgoing, ...) along a node path."""
    seq: list[int] = []
    for v, w in zip(path, path[1:]):
        for p, (x, q) in enumerate(tree.adj[v]):
            if x == w:
                seq.append(p)
                seq.append(q)
                break
        else:
            raise TreeError(f"nodes {v} and {w} are not adjacent")
    return tuple(seq)


def path_and_seq(tree: PortTree, a: int, b: int) -> tuple[list[int], tuple[int, ...]]:
    path = path_nodes(tree, a, b)
    return path, seq_of_path(tree, path)


def seq_between(tree: PortTree, a: int, b: int) -> tuple[int, ...]:
    return path_and_seq(tree, a, b)[1]


def outgoing_ports(seq: Sequence[int]) -> tuple[int, ...]:
    """Odd-indexed terms (1-based) of a full port sequence."""
    return tuple(seq[0::2])


def distance(tree: PortTree, a: int, b: int) -> int:
    return len(path_nodes(tree, a, b)) - 1


def distances_from(tree: PortTree, root: int) -> list[int]:
    return bfs_parents(tree, root)[3]


def eccentricity(tree: PortTree, v: int) -> int:
    return max(distances_from(tree, v))


# ---------------------------------------------------------------------------
# Centre and diameter
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Centre:
    """Centre of a tree: one node for even diameter, an edge for odd."""

    diameter: int
    nodes: tuple[int, ...]

    @property
    def is_edge(self) -> bool:
        return len(self.nodes) == 2

    @property
    def node(self) -> int:
        if self.is_edge:
            raise TreeError("centre is an edge, not a node")
        return self.nodes[0]


def centre(tree: PortTree) -> Centre:
    if tree.n == 1:
        return Centre(0, (0,))
    dist0 = distances_from(tree, 0)
    a = dist0.index(max(dist0))
    dist_a = distances_from(tree, a)
    diam = max(dist_a)
    b = dist_a.index(diam)
    path = path_nodes(tree, a, b)
    h = diam // 2
    if diam % 2 == 0:
        return Centre(diam, (path[h],))
    return Centre(diam, (path[h], path[h + 1]))


def diameter(tree: PortTree) -> int:
    return centre(tree).diameter


# ---------------------------------------------------------------------------
# DFS codes, canonical form, symmetry
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class TreeCode:
    """DFS code of a rooted tree: down/up walk bits and entry ports."""

    phi: tuple[int, ...]
    psi: tuple[int, ...]


def rooted_code(tree: PortTree, root: int) -> TreeCode:
    """DFS code visiting children in increasing port order.

    phi records 0 on each downward edge traversal and 1 on each upward one;
    psi records the entry port of every non-root node in first-visit order.
    """
    phi: list[int] = []
    psi: list[int] = []
    # stack entries: (node, entry port or -1, next port candidate)
    stack = [(root, -1, 0)]
    while stack:
        v, entry, p = stack.pop()
        deg = len(tree.adj[v])
        while p < deg and p == entry:
            p += 1
        if p >= deg:
            if stack:
                phi.append(1)
            continue
        stack.append((v, entry, p + 1))
        w, q = tree.adj[v][p]
        phi.append(0)
        psi.append(q)
        stack.append((w, q, 0))
    return TreeCode(tuple(phi), tuple(psi))


def decode_code(code: TreeCode) -> PortTree:
    """Rebuild the rooted tree encoded by (phi, psi); the root is node 0."""
    phi, psi = code.phi, code.psi
    n = len(psi) + 1
    if len(phi) != 2 * (n - 1):
        raise TreeError("phi length does not match psi length")
    maps: list[dict[int, tuple[int, int]]] = [dict() for _ in range(n)]
    entry_port = [-1] * n
    next_free = [0] * n  # next candidate down-port per node
    stack = [0]
    created = 0
    idx = 0
    for bit in phi:
        v = stack[-1]
        if bit == 0:
            created += 1
            w = created
            q = psi[idx]
            idx += 1
            p = next_free[v]
            if p == entry_port[v]:
                p += 1
            next_free[v] = p + 1
            maps[v][p] = (w, q)
            maps[w][q] = (v, p)
            entry_port[w] = q
            stack.append(w)
        else:
            stack.pop()
            if not stack:
                raise TreeError("phi walk is not balanced")
    if len(stack) != 1 or created != n - 1:
        raise TreeError("phi walk is not balanced")
    return PortTree.from_port_maps(maps)


def canonical_code(tree: PortTree) -> TreeCode:
    """Lexicographically smallest rooted code over all root choices."""
    best = None
    for root in range(tree.n):
        code = rooted_code(tree, root)
        if best is None or code < best:
            best = code
    return best


def _half_canon(tree: PortTree, root: int, blocked: int) -> tuple:
    """Canonical nested-tuple form of the component of root after deleting
    the edge {root, blocked}, with every edge's port pair kept explicit."""
    # post-order over the half, parent given per node
    children: dict[int, list[tuple[int, int, int]]] = {}
    order = []
    stack = [(root, blocked)]
    parent_of = {root: blocked}
    while stack:
        v, par = stack.pop()
        order.append(v)
        kids = []
        for p, (w, q) in enumerate(tree.adj[v]):
            if w != par:
                kids.append((p, q, w))
                parent_of[w] = v
                stack.append((w, v))
        children[v] = kids
    canon: dict[int, tuple] = {}
    for v in reversed(order):
        canon[v] = tuple((p, q, canon[w]) for (p, q, w) in children[v])
    return canon[root]


def is_symmetric(tree: PortTree) -> bool:
    """True iff the tree has a non-trivial port-preserving automorphism.

    Characterisation: odd diameter, equal ports at the central edge, and
    port-preserving isomorphic halves after deleting the central edge.
    """
    cen = centre(tree)
    if not cen.is_edge:
        return False
    c0, c1 = cen.nodes
    p0 = next(p for p, (w, _) in enumerate(tree.adj[c0]) if w == c1)
    p1 = next(p for p, (w, _) in enumerate(tree.adj[c1]) if w == c0)
    if p0 != p1:
        return False
    return _half_canon(tree, c0, c1) == _half_canon(tree, c1, c0)
