"""Constructors for every tree family used by the schemes and bounds,
plus seeded random port trees.

Families with distinguished nodes return a small instance record carrying
the tree together with the construction's landmarks (centre endpoints,
path endpoints, subtree roots); the plain ``gen_*`` entry points return
just the tree.
"""

from __future__ import annotations

import heapq
import itertools
import math
import random
from dataclasses import dataclass

from .tree import PortTree, TreeError, centre


class BadParametersError(TreeError):
    pass


class MarkerExhaustedError(BadParametersError):
    pass


class _Builder:
    """Accumulates nodes and port-labelled edges, then validates."""

    def __init__(self):
        self.maps: list[dict[int, tuple[int, int]]] = []

    def node(self) -> int:
        self.maps.append({})
        return len(self.maps) - 1

    def edge(self, u: int, pu: int, v: int, pv: int) -> None:
        if pu in self.maps[u] or pv in self.maps[v]:
            raise BadParametersError(f"port already used on edge {u}-{v}")
        self.maps[u][pu] = (v, pv)
        self.maps[v][pv] = (u, pu)

    def path_from(self, start: int, seq) -> int:
        """Attach a fresh path along the port sequence; returns its end."""
        cur = start
        for i in range(0, len(seq), 2):
            nxt = self.node()
            self.edge(cur, seq[i], nxt, seq[i + 1])
            cur = nxt
        return cur

    def build(self) -> PortTree:
        return PortTree.from_port_maps(self.maps)


# ---------------------------------------------------------------------------
# Fixed small families
# ---------------------------------------------------------------------------


def gen_path(k: int) -> PortTree:
    """Path of length k whose end-to-end port sequence is (0,0,1,0,1,0,...)."""
    if k < 2:
        raise BadParametersError("path family needs length >= 2")
    b = _Builder()
    a = b.node()
    b.path_from(a, (0, 0) + (1, 0) * (k - 1))
    return b.build()


def gen_intro_line() -> PortTree:
    """The length-6 line with ports 0,0,1,1,0,0,1,1,0,1,0,0 left to right."""
    b = _Builder()
    a = b.node()
    b.path_from(a, (0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0))
    return b.build()


# ---------------------------------------------------------------------------
# Double brooms
# ---------------------------------------------------------------------------


def _compositions_colex(total: int, parts: int):
    """Positive-integer tuples of given sum, in colexicographic order."""
    combos = itertools.combinations(range(1, total), parts - 1)
    tuples = []
    for cut in combos:
        prev = 0
        t = []
        for c in cut:
            t.append(c - prev)
            prev = c
        t.append(total - prev)
        tuples.append(tuple(t))
    tuples.sort(key=lambda t: tuple(reversed(t)))
    return tuples


def unrank_tuple(index: int, parts: int) -> tuple[int, ...]:
    """The index-th (1-based) tuple of positive integers, ordered by total
    then colexicographically: a concrete computable bijection."""
    if index < 1:
        raise BadParametersError("tuple ranks are 1-based")
    if parts == 1:
        return (index,)
    seen = 0
    total = parts
    while True:
        block = _compositions_colex(total, parts)
        if seen + len(block) >= index:
            return block[index - seen - 1]
        seen += len(block)
        total += 1


def rank_tuple(t: tuple[int, ...]) -> int:
    parts = len(t)
    if parts == 1:
        return t[0]
    total = sum(t)
    seen = 0
    for s in range(parts, total):
        seen += math.comb(s - 1, parts - 1)
    return seen + _compositions_colex(total, parts).index(t) + 1


@dataclass(frozen=True)
class DoubleBroom:
    tree: PortTree
    v_a: int
    v_b: int
    d: int
    delta: int
    a: int
    b: int

    @property
    def size(self) -> int:
        return self.tree.n


def build_double_broom(delta: int, a: int, b: int, d: int) -> DoubleBroom:
    """Handle of length D-4 with palindromic ports, one parameterised
    leaf-bouquet tree of height 2 at each end."""
    if d < 7 or d % 2 == 0:
        raise BadParametersError("double brooms need odd D >= 7")
    if delta < 1 or not (0 < a < b <= delta**delta):
        raise BadParametersError("need 0 < a < b <= delta^delta")
    budget = delta * (delta + 1)
    bld = _Builder()
    v_a = bld.node()
    handle = tuple((0, 0) if i % 2 == 1 else (1, 1) for i in range(1, d - 3))
    v_b = bld.path_from(v_a, tuple(x for pair in handle for x in pair))
    for v, param in ((v_a, a), (v_b, b)):
        counts = list(unrank_tuple(param, delta))
        counts.append(budget - delta - sum(counts))
        if counts[-1] < 0:
            raise BadParametersError(
                f"parameter {param} exceeds the side budget for delta={delta}"
            )
        for i, cnt in enumerate(counts, start=1):
            w = bld.node()
            bld.edge(v, i, w, 0)
            for leaf_port in range(1, cnt + 1):
                leaf = bld.node()
                bld.edge(w, leaf_port, leaf, 0)
    tree = bld.build()
    expected = d - 1 + 2 * budget
    if tree.n != expected:
        raise BadParametersError(f"size {tree.n} != expected {expected}")
    return DoubleBroom(tree, v_a, v_b, d, delta, a, b)


def gen_double_broom(delta: int, a: int, b: int, d: int) -> PortTree:
    return build_double_broom(delta, a, b, d).tree


# ---------------------------------------------------------------------------
# Swapped-subtree families (lower bounds for time below D - 2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GsigmaFamily:
    tree: PortTree
    c0: int
    c1: int
    p: dict[int, int]
    q: dict[int, int]
    k: int
    d: int
    sigma: frozenset[int]
    even: bool


def _attach_t0(b: _Builder, root: int) -> int:
    """Path of length 2 below root; the far leaf sits past ports (1,0,1,0)."""
    return b.path_from(root, (1, 0, 1, 0))


def _attach_t1(b: _Builder, root: int) -> tuple[int, int]:
    """Height-2 tree below root with leaf sequences (1,0,1,0) and (1,0,2,0)."""
    mid = b.path_from(root, (1, 0))
    y = b.path_from(mid, (1, 0))
    z = b.path_from(mid, (2, 0))
    return y, z


def _gsigma_h(bld: _Builder, d: int, k: int, even: bool):
    c0 = bld.node()
    c1 = bld.node()
    bld.edge(c0, 0, c1, 0)
    p: dict[int, int] = {}
    q: dict[int, int] = {}
    if even:
        h = (d - 2) // 2
        if d < 8 or h < 3:
            raise BadParametersError("even swapped family needs even D >= 8")
        p[1] = bld.path_from(c0, (1, 0) * h)
        q[1] = bld.path_from(c1, (1, 0) * (h + 1))
        first = 2
    else:
        h = (d - 1) // 2
        if d < 7 or h < 3:
            raise BadParametersError("odd swapped family needs odd D >= 7")
        first = 1
    for i in range(first, k + 1):
        p[i] = bld.path_from(c0, (i, 0) + (1, 0) * (h - 3))
        q[i] = bld.path_from(c1, (i, 0) + (1, 0) * (h - 3))
    return c0, c1, p, q


def build_gsigma(n: int, d: int, sigma, even: bool) -> GsigmaFamily:
    """The family member G_sigma: the base tree with the height-2 subtrees
    at p_i and q_i swapped exactly for i in sigma."""
    sigma = frozenset(sigma)
    k = math.ceil(n / d) if not even else math.ceil(n / (d - 1))
    if k < 2:
        raise BadParametersError("need at least two branch pairs")
    if not sigma <= set(range(2, k + 1)):
        raise BadParametersError(f"sigma must be a subset of {{2..{k}}}")
    if even != (d % 2 == 0):
        raise BadParametersError("diameter parity does not match the family")
    bld = _Builder()
    c0, c1, p, q = _gsigma_h(bld, d, k, even)
    for i in range(2 if even else 1, k + 1):
        t0_root, t1_root = (q[i], p[i]) if i in sigma else (p[i], q[i])
        _attach_t0(bld, t0_root)
        _attach_t1(bld, t1_root)
    tree = bld.build()
    expected = ((d - 1) * k + 2) if even else (d * k + 2)
    if tree.n != expected:
        raise BadParametersError(f"size {tree.n} != expected {expected}")
    return GsigmaFamily(tree, c0, c1, p, q, k, d, sigma, even)


def gen_gsigma_odd(n: int, d: int, sigma) -> PortTree:
    return build_gsigma(n, d, sigma, even=False).tree


def gen_gsigma_even(n: int, d: int, sigma) -> PortTree:
    return build_gsigma(n, d, sigma, even=True).tree


def build_gsigma_h(d: int, k: int, even: bool) -> GsigmaFamily:
    """Just the shared skeleton H of the swapped family (a valid tree)."""
    bld = _Builder()
    c0, c1, p, q = _gsigma_h(bld, d, k, even)
    return GsigmaFamily(bld.build(), c0, c1, p, q, k, d, frozenset(), even)


# ---------------------------------------------------------------------------
# Template family with markers (Theta(n) advice regime)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TemplateInstance:
    tree: PortTree
    c: int
    k: int
    s: int
    f: int
    tau: int
    d: int
    p: dict[int, int]
    path_nodes: dict[int, list[int]]
    marker_roots: tuple[int, ...]
    marker_y: int


def _marker_shapes(y: int):
    """Height-2 marker trees: compositions of z = y^2 leaves over x parts."""
    z = y * y
    x = math.ceil(y**1.5)
    shapes = []
    for cut in itertools.combinations(range(z + x - 1), x - 1):
        prev = -1
        t = []
        for c in cut:
            t.append(c - prev - 1)
            prev = c
        t.append(z + x - 2 - prev)
        shapes.append(tuple(t))
    shapes.sort()
    return x, shapes


def build_template(
    n: int, d: int, alpha: float, labeling=None, marker_y: int | None = None
) -> TemplateInstance:
    """Template tree with fixed path prefixes, markers, and the free edges
    e_{i,j} set by the labeling function (default: all zero)."""
    if d % 2 != 0 or d < 8:
        raise BadParametersError("template needs even D >= 8")
    if not 0 < alpha < 0.5:
        raise BadParametersError("alpha must be in (0, 1/2)")
    tau = math.floor(alpha * d)
    if tau < 5:
        raise BadParametersError("marker spacing needs tau >= 5")
    half = d // 2
    f = tau + 1 if (tau + 1) % 2 == half % 2 else tau + 2
    s = half - f
    if s < 2 or s % 2 != 0:
        raise BadParametersError(
            f"no free nodes: D/2 = {half}, fixed prefix f = {f}"
        )
    k = math.ceil(2 * n / d)
    if k < 2:
        raise BadParametersError("need at least two paths")
    if labeling is None:
        labeling = {}
    get_label = labeling if callable(labeling) else lambda i, j: labeling.get((i, j), 0)

    marker_positions = list(range(2, half, max(1, tau - 4)))
    demand = k * len(marker_positions)
    y = marker_y if marker_y is not None else 2
    while True:
        x, shapes = _marker_shapes(y)
        if len(shapes) >= demand and x + 2 != k:
            break
        if marker_y is not None:
            raise MarkerExhaustedError(
                f"marker family y={y} supplies {len(shapes)} < {demand}"
            )
        y += 1

    bld = _Builder()
    c = bld.node()
    p: dict[int, int] = {}
    paths: dict[int, list[int]] = {}
    marker_roots: list[int] = []
    shape_iter = iter(shapes)
    for i in range(k):
        # nodes x_0 = p_i .. x_{half} = c; ports filled per position
        nodes = [bld.node() for _ in range(half)]
        nodes.append(c)
        p[i] = nodes[0]
        paths[i] = nodes

        def port_at(pos: int, towards_c: bool) -> int:
            # fixed prefix: first f nodes from p_i carry (0 up, 1 down)
            if pos == 0:
                return 0
            if pos < f:
                return 0 if towards_c else 1
            # free node v_{i,t} with t = half - pos; e_{i,j} joins t = 2j-1
            # (closer to c) to t = 2j, so odd t has its pair edge downwards
            t = half - pos
            label = get_label(i, (t + 1) // 2)
            if t % 2 == 1:
                return 1 - label if towards_c else label
            return label if towards_c else 1 - label

        for pos in range(half):
            pu = port_at(pos, towards_c=True)
            if pos + 1 == half:
                pv = i
            else:
                pv = port_at(pos + 1, towards_c=False)
            bld.edge(nodes[pos], pu, nodes[pos + 1], pv)
        for pos in marker_positions:
            root = nodes[pos]
            marker_roots.append(root)
            try:
                shape = next(shape_iter)
            except StopIteration as exc:
                raise MarkerExhaustedError("ran out of marker shapes") from exc
            for t, leaf_cnt in enumerate(shape):
                w = bld.node()
                bld.edge(root, 2 + t, w, 0)
                for lp in range(1, leaf_cnt + 1):
                    leaf = bld.node()
                    bld.edge(w, lp, leaf, 0)
    tree = bld.build()
    cen = centre(tree)
    if cen.diameter != d or cen.nodes != (c,):
        raise BadParametersError("template construction broke the diameter")
    return TemplateInstance(
        tree, c, k, s, f, tau, d, p, paths, tuple(marker_roots), y
    )


def gen_template(n: int, d: int, alpha: float, labeling=None) -> PortTree:
    return build_template(n, d, alpha, labeling).tree


# ---------------------------------------------------------------------------
# Confusion trees (even constant diameter, time D - 3)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConfusionInstance:
    tree: PortTree
    c: int
    w: dict[int, int]
    q: dict[int, int]
    delta: int
    h: int
    sigma: tuple[int, ...]


def _confusion_subtree(bld: _Builder, root: int, avoid: int, x: int, delta: int):
    """Attach the confusion gadget avoiding port ``avoid`` below ``root``;
    returns the endpoint of the distinguished port-delta branch (or None).

    The gadget's recursive leaves (height-0 copies) keep port 0 on their
    side: a leaf owns the single port 0, whatever the parent-side port is.
    """
    if x == 0:
        return None
    if x == 1:
        for prt in range(delta + 1):
            if prt == avoid:
                continue
            leaf = bld.node()
            bld.edge(root, prt, leaf, 0)
        return None
    p_delta = bld.path_from(root, (delta, 0) + (1, 0) * (x - 2))
    for j in range(delta):
        if j == avoid:
            continue
        cj = bld.node()
        bld.edge(root, j, cj, j)
        for kk in range(delta):
            if kk == j:
                continue
            bjk = bld.node()
            bld.edge(cj, kk, bjk, kk if x - 2 >= 1 else 0)
            _confusion_subtree(bld, bjk, kk, x - 2, delta)
    return p_delta


def count_confusion_subtree(delta: int, x: int) -> int:
    """Node count of the height-x confusion gadget, root included."""
    bld = _Builder()
    root = bld.node()
    _confusion_subtree(bld, root, 0, x, delta)
    return len(bld.maps)


def build_confusion(delta: int, h: int, sigma=None) -> ConfusionInstance:
    """The even-diameter family: confusion gadgets of height h-1 around a
    central node, with sigma permuting the leaf counts at q_1..q_{delta-1}."""
    if delta < 2 or h < 3:
        raise BadParametersError("confusion family needs delta >= 2, h >= 3")
    if sigma is None:
        sigma = tuple(range(1, delta))
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, delta)):
        raise BadParametersError("sigma must permute {1..delta-1}")
    bld = _Builder()
    c = bld.node()
    w: dict[int, int] = {}
    q: dict[int, int] = {}
    for i in range(delta):
        w[i] = bld.node()
        bld.edge(c, i, w[i], i)
        q[i] = _confusion_subtree(bld, w[i], i, h - 1, delta)
        leaf_count = delta + (sigma[i - 1] if i >= 1 else 0) + 1
        for lp in range(1, leaf_count + 1):
            leaf = bld.node()
            bld.edge(q[i], lp, leaf, 0)
    tree = bld.build()
    cen = centre(tree)
    if cen.diameter != 2 * h:
        raise BadParametersError(f"confusion diameter {cen.diameter} != {2 * h}")
    return ConfusionInstance(tree, c, w, q, delta, h, sigma)


def gen_confusion(delta: int, h: int, sigma=None) -> PortTree:
    return build_confusion(delta, h, sigma).tree


# ---------------------------------------------------------------------------
# Random trees
# ---------------------------------------------------------------------------


def _ports_from_edges(n: int, edges, rng: random.Random) -> PortTree:
    incident: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)
    port_of: list[dict[int, int]] = [{} for _ in range(n)]
    for v in range(n):
        eids = incident[v][:]
        rng.shuffle(eids)
        for prt, eid in enumerate(eids):
            port_of[v][eid] = prt
    maps: list[dict[int, tuple[int, int]]] = [{} for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        pu, pv = port_of[u][eid], port_of[v][eid]
        maps[u][pu] = (v, pv)
        maps[v][pv] = (u, pu)
    return PortTree.from_port_maps(maps)


def gen_random(n: int, seed: int) -> PortTree:
    """Uniform random labelled tree shape with per-node random ports."""
    if n < 1:
        raise BadParametersError("need n >= 1")
    rng = random.Random(("random-tree", seed, n).__repr__())
    if n == 1:
        return PortTree.from_port_maps([{}])
    if n == 2:
        return PortTree.from_port_maps([{0: (1, 0)}, {0: (0, 0)}])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    edges.append((u, heapq.heappop(leaves)))
    return _ports_from_edges(n, edges, rng)


def gen_random_with_diameter(
    n: int, d: int, seed: int, branch_cap: int | None = None
) -> PortTree:
    """Random tree with diameter exactly d: a spine path plus attachments
    that never stretch any eccentricity beyond d.  ``branch_cap`` limits
    how far attachments may wander from the spine."""
    if n < d + 1 or d < 1:
        raise BadParametersError("need n >= d + 1 >= 2")
    rng = random.Random(("diam-tree", seed, n, d).__repr__())
    edges = [(i, i + 1) for i in range(d)]
    dist_a = list(range(d + 1))
    dist_b = list(range(d, -1, -1))
    spine_dist = [0] * (d + 1)
    for _ in range(n - d - 1):
        allowed = [
            u
            for u in range(len(dist_a))
            if max(dist_a[u], dist_b[u]) + 1 <= d
            and (branch_cap is None or spine_dist[u] < branch_cap)
        ]
        if not allowed:
            raise BadParametersError("no attachment point keeps the diameter")
        u = rng.choice(allowed)
        x = len(dist_a)
        edges.append((u, x))
        dist_a.append(dist_a[u] + 1)
        dist_b.append(dist_b[u] + 1)
        spine_dist.append(spine_dist[u] + 1)
    tree = _ports_from_edges(n, edges, rng)
    if centre(tree).diameter != d:
        raise BadParametersError("diameter drifted during construction")
    return tree


def gen_spider(leg_lengths, seed: int = 0) -> PortTree:
    """Hub with one path per entry of leg_lengths, random ports."""
    legs = list(leg_lengths)
    if len(legs) < 2 or any(l < 1 for l in legs):
        raise BadParametersError("a spider needs >= 2 legs of length >= 1")
    rng = random.Random(("spider", seed, tuple(legs)).__repr__())
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return _ports_from_edges(nxt, edges, rng)
