"""Radius-r views: the only tree information a node program may consume.

``View`` is the ball of radius r around a node: every node at distance at
most r, every port number at nodes of distance below r, and the true
degree of each node at distance exactly r.  Views never expose node
indices of the underlying simulation tree; they compare and hash by a
canonical structural form.

The ``_source`` table mapping view nodes back to tree nodes exists for
oracle- and harness-side bookkeeping only.  Node programs must not read
it; the anonymity tests permute tree indices to catch violations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .bits import fixed_encode, gamma_encode, uint_encode
from .tree import PortTree, TreeError


class ViewError(TreeError):
    pass


class NoEndlessPathsError(ViewError):
    pass


class RadiusMismatchError(ViewError):
    pass


class NotSaturatedError(ViewError):
    pass


class IncompleteViewError(ViewError):
    pass


class BoundExceededError(ViewError):
    pass


class View:
    """Rooted partial port tree with frontier degree annotations.

    Node 0 is the observing node.  ``adj[i]`` maps each known port of view
    node i to ``(view node, reverse port)``; frontier nodes know only the
    port of the edge through which they were reached.  ``deg[i]`` is the
    node's true degree in the underlying tree.
    """

    __slots__ = ("radius", "adj", "deg", "parent", "depth", "_source", "_canon")

    def __init__(self, radius, adj, deg, parent, depth, source=None):
        self.radius: int = radius
        self.adj: tuple[dict[int, tuple[int, int]], ...] = tuple(adj)
        self.deg: tuple[int, ...] = tuple(deg)
        self.parent: tuple[int, ...] = tuple(parent)
        self.depth: tuple[int, ...] = tuple(depth)
        self._source: tuple[int, ...] | None = tuple(source) if source is not None else None
        self._canon = None

    @property
    def size(self) -> int:
        return len(self.adj)

    def is_frontier(self, i: int) -> bool:
        """True when node i may have edges the view does not show."""
        return self.deg[i] > len(self.adj[i])

    def is_true_leaf(self, i: int) -> bool:
        return self.deg[i] == 1

    def is_saturated(self) -> bool:
        """True when the view shows the whole tree (no hidden edges)."""
        return all(self.deg[i] == len(self.adj[i]) for i in range(self.size))

    def source_node(self, i: int) -> int:
        if self._source is None:
            raise ViewError("view carries no source table")
        return self._source[i]

    def canonical(self) -> tuple:
        """Nested-tuple canonical form; equal iff views are equal."""
        if self._canon is None:
            children: list[list[tuple[int, int, int]]] = [[] for _ in range(self.size)]
            order = []
            stack = [0]
            while stack:
                v = stack.pop()
                order.append(v)
                for p in sorted(self.adj[v]):
                    w, q = self.adj[v][p]
                    if w != self.parent[v]:
                        children[v].append((p, q, w))
                        stack.append(w)
            canon: list[tuple | None] = [None] * self.size
            for v in reversed(order):
                canon[v] = (
                    self.deg[v],
                    tuple((p, q, canon[w]) for (p, q, w) in children[v]),
                )
            self._canon = canon[0]
        return self._canon

    def __eq__(self, other) -> bool:
        return isinstance(other, View) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"View(radius={self.radius}, size={self.size})"

    # -- in-view geometry -------------------------------------------------

    def distances_from(self, start: int) -> list[int]:
        dist = [-1] * self.size
        dist[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, _ in self.adj[v].values():
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def path_to_root(self, i: int) -> list[int]:
        """Node path from the root down to i."""
        chain = [i]
        while chain[-1] != 0:
            chain.append(self.parent[chain[-1]])
        chain.reverse()
        return chain

    def seq_of_path(self, path: Sequence[int]) -> tuple[int, ...]:
        seq: list[int] = []
        for v, w in zip(path, path[1:]):
            for p, (x, q) in self.adj[v].items():
                if x == w:
                    seq.append(p)
                    seq.append(q)
                    break
            else:
                raise ViewError(f"view nodes {v} and {w} are not adjacent")
        return tuple(seq)


def extract_view(tree: PortTree, v: int, r: int) -> View:
    """The view V(v, r): radius-r ball with frontier degree annotations."""
    if r < 0:
        raise ViewError("radius must be non-negative")
    index = {v: 0}
    adj: list[dict[int, tuple[int, int]]] = [{}]
    deg = [tree.degree(v)]
    parent = [-1]
    depth = [0]
    source = [v]
    queue = deque([v])
    while queue:
        u = queue.popleft()
        iu = index[u]
        if depth[iu] == r:
            continue
        for p, (w, q) in enumerate(tree.adj[u]):
            if w in index and index[w] == parent[iu]:
                continue
            iw = len(adj)
            index[w] = iw
            adj.append({})
            deg.append(tree.degree(w))
            parent.append(iu)
            depth.append(depth[iu] + 1)
            source.append(w)
            adj[iu][p] = (iw, q)
            adj[iw][q] = (iu, p)
            queue.append(w)
    return View(r, adj, deg, parent, depth, source)


def views_equal(a: View, b: View) -> bool:
    """Port-preserving, root-preserving isomorphism with matching annotations."""
    return a.canonical() == b.canonical()


@dataclass(frozen=True)
class PathClasses:
    """Root-anchored paths of a view, as node-index tuples."""

    endless: tuple[tuple[int, ...], ...]
    terminated: tuple[tuple[int, ...], ...]


def endless_endpoints(view: View) -> list[int]:
    """View nodes at depth exactly r that are not leaves of the true tree.

    A radius-0 view of the sole node of a one-node tree has degree 0; by
    convention its length-0 path counts as endless (degree != 1).
    """
    return [
        i
        for i in range(view.size)
        if view.depth[i] == view.radius and view.deg[i] != 1
    ]


def classify_paths(view: View) -> PathClasses:
    endless = tuple(tuple(view.path_to_root(i)) for i in endless_endpoints(view))
    terminated = tuple(
        tuple(view.path_to_root(i)) for i in range(view.size) if view.deg[i] == 1
    )
    return PathClasses(endless, terminated)


def gateway(view: View) -> int:
    """Deepest view node through which every endless path passes."""
    ends = endless_endpoints(view)
    if not ends:
        raise NoEndlessPathsError("view has no endless paths")
    total = len(ends)
    # count endless endpoints per subtree, then walk down while one child
    # branch holds them all
    counts = [0] * view.size
    for e in ends:
        i = e
        while i != -1:
            counts[i] += 1
            i = view.parent[i]
    g = 0
    while True:
        nxt = None
        for w, _ in view.adj[g].values():
            if w != view.parent[g] and counts[w] == total:
                nxt = w
                break
        if nxt is None:
            return g
        g = nxt


def reconstruct_tree(view: View, diam: int) -> tuple[PortTree, int]:
    """Rebuild the whole tree from V(v, diam-1); returns (tree, index of v).

    Every node hidden from such a view is a leaf hanging off a frontier
    node, so completion attaches deg-1 leaves at each frontier node's
    unused ports, with port 0 on the leaf side.
    """
    if view.radius != diam - 1:
        raise RadiusMismatchError(
            f"view radius {view.radius} is not diam-1 = {diam - 1}"
        )
    maps: list[dict[int, tuple[int, int]]] = [dict(view.adj[i]) for i in range(view.size)]
    for i in range(view.size):
        if view.deg[i] > len(view.adj[i]):
            used = set(view.adj[i])
            for p in range(view.deg[i]):
                if p not in used:
                    leaf = len(maps)
                    maps.append({0: (i, p)})
                    maps[i][p] = (leaf, 0)
    return PortTree.from_port_maps(maps), 0


def view_to_tree(view: View) -> tuple[PortTree, int]:
    """Convert a saturated view into a PortTree; returns (tree, index of v)."""
    if not view.is_saturated():
        raise NotSaturatedError("view does not show the entire tree")
    maps = [dict(view.adj[i]) for i in range(view.size)]
    return PortTree.from_port_maps(maps), 0


def extract_subview(view: View, center: int, r: int) -> View:
    """The view the node at ``center`` would have at radius r, cut out of a
    larger view.  Raises IncompleteViewError when the enclosing view lacks
    required ports (cannot happen for in-contract callers)."""
    dist = view.distances_from(center)
    index = {center: 0}
    adj: list[dict[int, tuple[int, int]]] = [{}]
    deg = [view.deg[center]]
    parent = [-1]
    depth = [0]
    source = [view._source[center]] if view._source is not None else None
    queue = deque([center])
    while queue:
        u = queue.popleft()
        iu = index[u]
        if depth[iu] == r:
            continue
        if view.is_frontier(u):
            raise IncompleteViewError(
                "interior node of requested sub-view is a frontier of the host view"
            )
        for p, (w, q) in view.adj[u].items():
            if w in index and index[w] == parent[iu]:
                continue
            iw = len(adj)
            index[w] = iw
            adj.append({})
            deg.append(view.deg[w])
            parent.append(iu)
            depth.append(depth[iu] + 1)
            if source is not None:
                source.append(view._source[w])
            adj[iu][p] = (iw, q)
            adj[iw][q] = (iu, p)
            queue.append(w)
    if depth and max(depth) > r:
        raise IncompleteViewError("sub-view extraction overran requested radius")
    return View(r, adj, deg, parent, depth, source)


# ---------------------------------------------------------------------------
# Injective binary encodings of views
# ---------------------------------------------------------------------------


def _dfs_fields(view: View):
    """(phi, entry ports, degree annotations in first-visit order)."""
    phi: list[int] = []
    psi: list[int] = []
    degs: list[int] = [view.deg[0]]
    # stack of (node, iterator position) with port-ordered children
    kids = []
    for v in range(view.size):
        ordered = [
            (p, view.adj[v][p]) for p in sorted(view.adj[v]) if view.adj[v][p][0] != view.parent[v]
        ]
        kids.append(ordered)
    stack = [(0, 0)]
    while stack:
        v, i = stack.pop()
        if i == len(kids[v]):
            if stack:
                phi.append(1)
            continue
        stack.append((v, i + 1))
        p, (w, q) = kids[v][i]
        phi.append(0)
        psi.append(q)
        degs.append(view.deg[w])
        stack.append((w, 0))
    return phi, psi, degs


def _port_width(deg: int) -> int:
    return (deg - 1).bit_length() if deg > 1 else 0


def view_fingerprint(view: View) -> str:
    """Self-delimiting injective bit encoding of a view.

    Layout: gamma(m), phi raw (2(m-1) bits), gamma(deg_i + 1) per node in
    first-visit order, then each entry port in ceil(log2 deg) bits using
    the degree just decoded.  No two distinct views share an encoding, and
    no encoding is a prefix of another.
    """
    phi, psi, degs = _dfs_fields(view)
    parts = [gamma_encode(view.size)]
    parts.append("".join("01"[b] for b in phi))
    parts.extend(uint_encode(d) for d in degs)
    parts.extend(fixed_encode(port, _port_width(degs[i + 1])) for i, port in enumerate(psi))
    return "".join(parts)


def signature_of_view(view: View, bound_n: int) -> str:
    """Fixed-length injective encoding for views of at most bound_n nodes.

    Layout: phi padded to 2(bound_n - 1) bits with trailing 1s (impossible
    in a balanced walk prefix), entry ports as fixed-width fields, then
    degree annotations, both zero-padded to bound_n-sized blocks.  For a
    fixed node count the induced lexicographic order coincides with the
    (phi, psi) order of DFS codes.
    """
    if view.size > bound_n:
        raise BoundExceededError(f"view has {view.size} nodes, bound is {bound_n}")
    phi, psi, degs = _dfs_fields(view)
    w_port = _port_width(bound_n - 1) if bound_n >= 2 else 0
    w_deg = max(1, (bound_n - 1).bit_length())
    phi_bits = "".join("01"[b] for b in phi).ljust(2 * (bound_n - 1), "1")
    psi_bits = "".join(fixed_encode(p, w_port) for p in psi).ljust(
        (bound_n - 1) * w_port, "0"
    )
    deg_bits = "".join(fixed_encode(d, w_deg) for d in degs).ljust(bound_n * w_deg, "0")
    return phi_bits + psi_bits + deg_bits


def signature(tree: PortTree, root: int, bound_n: int) -> str:
    """Fixed-length signature of the whole tree rooted at ``root``."""
    if tree.n > bound_n:
        raise BoundExceededError(f"tree has {tree.n} nodes, bound is {bound_n}")
    return signature_of_view(extract_view(tree, root, tree.n), bound_n)
