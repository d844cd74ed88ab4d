"""The five advice schemes: oracle-side construction and node-side programs.

Every scheme pairs an oracle (whole tree -> advice bits) with a node
program (view, advice -> port sequence).  Programs consume nothing but
the view and the advice; helpers shared with the oracles operate on
structure alone so both sides reproduce identical lists and indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bits import BitReader, gamma_encode, uint_encode
from .oracles import (
    SymmetricTreeError,
    TimeTooShortError,
    canonical_root,
    feasible_leaders,
    outgoing_to,
    view_classes,
)
from .sim import ElectionOutcome, NodeProgram, run_election
from .tree import (
    PortTree,
    TreeCode,
    TreeError,
    bfs_parents,
    canonical_code,
    centre,
    decode_code,
    is_symmetric,
    outgoing_ports,
)
from .trie import (
    DuplicateStringsError,
    build_trie,
    deserialize_trie,
    retrieve,
    serialize_trie,
)
from .views import (
    IncompleteViewError,
    View,
    extract_subview,
    extract_view,
    endless_endpoints,
    gateway,
    reconstruct_tree,
    view_fingerprint,
    view_to_tree,
)


class SchemeError(TreeError):
    pass


class OddDiameterError(SchemeError):
    pass


class EvenDiameterError(SchemeError):
    pass


class ListsEqualError(SchemeError):
    pass


class TimeOutOfRangeError(SchemeError):
    pass


class XiTooLargeError(SchemeError):
    pass


@dataclass(frozen=True)
class AdviceScheme:
    name: str
    applicable: Callable[[PortTree, int], tuple[bool, str]]
    oracle: Callable[[PortTree, int], str]
    program: NodeProgram
    default_tau: Callable[[PortTree], int]


def run_scheme(tree: PortTree, scheme: AdviceScheme, tau: int | None = None) -> ElectionOutcome:
    if tau is None:
        tau = scheme.default_tau(tree)
    return run_election(tree, scheme.program, scheme.oracle, tau)


# ---------------------------------------------------------------------------
# Shared walkers (identical on oracle trees and node views)
# ---------------------------------------------------------------------------


def _tree_ports(tree: PortTree):
    def iter_ports(v):
        return ((p, w, q) for p, (w, q) in enumerate(tree.adj[v]))

    return iter_ports, tree.degree, tree.degree


def _view_ports(view: View):
    def iter_ports(v):
        return ((p, w, q) for p, (w, q) in sorted(view.adj[v].items()))

    def known(v):
        return len(view.adj[v])

    return iter_ports, lambda v: view.deg[v], known


def _complete_sequences(ports, start, avoid=None):
    """Full port sequences of every simple path leaving ``start``, skipping
    the single edge ``avoid`` (a frozenset of two node ids) if given."""
    iter_ports, deg_of, known_of = ports
    out = []
    stack = [(start, -1, ())]
    while stack:
        v, entry, seq = stack.pop()
        if deg_of(v) > known_of(v):
            raise IncompleteViewError(
                "path enumeration reached a node with hidden edges"
            )
        for p, w, q in iter_ports(v):
            if p == entry:
                continue
            if avoid is not None and {v, w} == avoid:
                continue
            nxt = seq + (p, q)
            out.append(nxt)
            stack.append((w, q, nxt))
    out.sort()
    return out


def _prefix_sequences(ports, start, max_len):
    """Every port sequence of length <= max_len readable along simple paths
    from ``start``, including odd-length dangling prefixes."""
    iter_ports, deg_of, known_of = ports
    out = []
    stack = [(start, -1, ())]
    while stack:
        v, entry, seq = stack.pop()
        present = set()
        for p, w, q in iter_ports(v):
            present.add(p)
            if p == entry:
                continue
            if len(seq) + 1 <= max_len:
                out.append(seq + (p,))
            if len(seq) + 2 <= max_len:
                out.append(seq + (p, q))
                stack.append((w, q, seq + (p, q)))
        for p in range(deg_of(v)):
            if p in present or p == entry:
                continue
            # hidden edge: the dangling outgoing port is still determined
            if len(seq) + 1 <= max_len:
                out.append(seq + (p,))
            if len(seq) + 2 <= max_len:
                raise IncompleteViewError(
                    "prefix enumeration would need to cross a hidden edge"
                )
    out.sort()
    return out


def _ball_sequences(ports, start, h):
    """Sorted full sequences seq(start, w) over all w at distance <= h,
    the empty sequence included."""
    iter_ports, deg_of, known_of = ports
    out = [()]
    stack = [(start, -1, ())]
    while stack:
        v, entry, seq = stack.pop()
        if len(seq) == 2 * h:
            continue
        if deg_of(v) > known_of(v):
            raise IncompleteViewError("ball enumeration reached hidden edges")
        for p, w, q in iter_ports(v):
            if p == entry:
                continue
            nxt = seq + (p, q)
            out.append(nxt)
            stack.append((w, q, nxt))
    out.sort()
    return out


def _view_path(view: View, a: int, b: int) -> list[int]:
    prev = {a: -1}
    queue = [a]
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        if v == b:
            break
        for w, _ in view.adj[v].values():
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# Representatives (ComputeReps) and FindRep
# ---------------------------------------------------------------------------


def _greedy_reps(root, children, span):
    """Greedy covering of deep leaves by subtree roots ``span - 1`` above
    them.  ``children[v]`` holds (port, reverse port, child) triples; ties
    between equally deep leaves break on the port sequence from the root,
    which is a common-prefix-consistent order for nested invocations."""
    parent = {root: None}
    depth = {root: 0}
    seqkey = {root: ()}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for p, q, w in children[v]:
            parent[w] = v
            depth[w] = depth[v] + 1
            seqkey[w] = seqkey[v] + (p, q)
            order.append(w)
            stack.append(w)
    leaves = [v for v in order if not children[v]]
    eligible = sorted(
        (x for x in leaves if depth[x] >= span - 1),
        key=lambda x: (-depth[x], seqkey[x]),
    )
    covered = set()
    reps = []
    for x in eligible:
        if x in covered:
            continue
        r = x
        for _ in range(span - 1):
            r = parent[r]
        reps.append(r)
        st = [r]
        while st:
            y = st.pop()
            if not children[y]:
                covered.add(y)
            for _, _, w in children[y]:
                st.append(w)
    return reps


def compute_reps(tree: PortTree, root: int, span: int) -> list[int]:
    """Roots of the greedily chosen height-(span-1) subtrees covering all
    leaves of depth at least span - 1, in selection order."""
    parent, _, _, _, _ = bfs_parents(tree, root)
    children = {
        v: [(p, q, w) for p, (w, q) in enumerate(tree.adj[v]) if parent[w] == v]
        for v in range(tree.n)
    }
    return _greedy_reps(root, children, span)


def find_rep(view: View, d: int, tau: int) -> int:
    """Representative of the observing node, as a view node index.

    Locates the ancestor w at distance span - 1 through which all endless
    paths pass, cuts the view at the edge continuing beyond w, reruns the
    greedy covering on the remaining subtree, and picks the deepest chosen
    root on the path from a leaf below the observer to w.
    """
    span = tau - (d + 1) // 2
    if span < 1:
        raise TimeOutOfRangeError(f"time {tau} leaves no room below the centre")
    g = gateway(view)
    gpath = view.path_to_root(g)
    if len(gpath) <= span:
        raise IncompleteViewError("endless paths share too short a prefix")
    w = gpath[span - 1]
    beyond = gpath[span]
    # component of w after cutting the edge towards `beyond`, rooted at w
    children: dict[int, list[tuple[int, int, int]]] = {}
    stack = [(w, beyond)]
    nodes = []
    while stack:
        v, par = stack.pop()
        nodes.append(v)
        if view.deg[v] > len(view.adj[v]):
            raise IncompleteViewError("subtree below the cut is not fully visible")
        kids = []
        for p in sorted(view.adj[v]):
            x, q = view.adj[v][p]
            if x != par:
                kids.append((p, q, x))
                stack.append((x, v))
        children[v] = kids
    reps = _greedy_reps(w, children, span)
    # leaf below the observer (node 0), smallest port sequence first
    seqkey = {w: ()}
    parent_in = {w: None}
    order = [w]
    st = [w]
    while st:
        v = st.pop()
        for p, q, x in children[v]:
            seqkey[x] = seqkey[v] + (p, q)
            parent_in[x] = v
            order.append(x)
            st.append(x)
    in_sub = {0}
    for v in order:
        if parent_in[v] in in_sub:
            in_sub.add(v)
    leaf_pool = [v for v in in_sub if not children[v]]
    if not leaf_pool:
        raise IncompleteViewError("observer has no leaf below it in the cut subtree")
    leaf = min(leaf_pool, key=lambda x: seqkey[x])
    rep_set = set(reps)
    chain = leaf
    chosen = None
    while chain is not None:
        if chain in rep_set:
            chosen = chain
            break
        chain = parent_in[chain]
    if chosen is None:
        raise IncompleteViewError("no representative on the leaf-to-cut path")
    return chosen


# ---------------------------------------------------------------------------
# Scheme: full view, zero advice (time diam)
# ---------------------------------------------------------------------------


def _require_asymmetric(tree: PortTree) -> None:
    if is_symmetric(tree):
        raise SymmetricTreeError("symmetric trees admit no leader")


def _full_view_oracle(tree: PortTree, tau: int) -> str:
    _require_asymmetric(tree)
    return ""


def _map_leader_output(t: PortTree, me: int) -> tuple[int, ...]:
    leader = canonical_root(t)
    return outgoing_to(t, leader)[me]


def _full_view_program(view: View, advice: str) -> tuple[int, ...]:
    t, me = view_to_tree(view)
    return _map_leader_output(t, me)


def full_view_scheme() -> AdviceScheme:
    def applicable(tree, tau):
        if is_symmetric(tree):
            return False, "symmetric"
        d = centre(tree).diameter
        if tau < d:
            return False, f"needs time >= diam = {d}"
        return True, ""

    return AdviceScheme(
        "full_view",
        applicable,
        _full_view_oracle,
        NodeProgram("full_view", _full_view_program),
        lambda tree: centre(tree).diameter,
    )


# ---------------------------------------------------------------------------
# Scheme: reconstruct from the diameter (time diam - 1, advice gamma(diam))
# ---------------------------------------------------------------------------


def _diam_minus_1_oracle(tree: PortTree, tau: int) -> str:
    _require_asymmetric(tree)
    return gamma_encode(centre(tree).diameter)


def _diam_minus_1_program(view: View, advice: str) -> tuple[int, ...]:
    d = BitReader(advice).read_gamma()
    t, me = reconstruct_tree(view, d)
    return _map_leader_output(t, me)


def diam_minus_1_scheme() -> AdviceScheme:
    def applicable(tree, tau):
        if is_symmetric(tree):
            return False, "symmetric"
        d = centre(tree).diameter
        if tau != d - 1:
            return False, f"runs only at time diam-1 = {d - 1}"
        return True, ""

    return AdviceScheme(
        "diam_minus_1",
        applicable,
        _diam_minus_1_oracle,
        NodeProgram("diam_minus_1", _diam_minus_1_program),
        lambda tree: centre(tree).diameter - 1,
    )


# ---------------------------------------------------------------------------
# Scheme: EvenElect (even diameter, time diam - 2)
# ---------------------------------------------------------------------------


def _even_oracle(tree: PortTree, tau: int) -> str:
    cen = centre(tree)
    if cen.diameter % 2 == 1:
        raise OddDiameterError("EvenElect requires even diameter")
    return gamma_encode(cen.diameter)


def _even_program(view: View, advice: str) -> tuple[int, ...]:
    d = BitReader(advice).read_gamma()
    if d == 2:
        # radius-0 views cannot be told apart; every diameter-2 tree is a
        # star, so leaves head through their only port and the hub stays
        return (0,) if view.deg[0] == 1 else ()
    h = d // 2
    if not endless_endpoints(view):
        t, me = view_to_tree(view)
        vc = centre(t).node
        return outgoing_to(t, vc)[me]
    g = gateway(view)
    dist_g = view.distances_from(g)
    if dist_g[0] <= h - 1 or max(dist_g) > dist_g[0]:
        ell = h - 1
    else:
        ell = h
    gpath = view.path_to_root(g)
    return outgoing_ports(view.seq_of_path(gpath[: ell + 1]))


def even_elect_scheme() -> AdviceScheme:
    def applicable(tree, tau):
        d = centre(tree).diameter
        if d % 2 == 1 or d < 2:
            return False, "needs even diameter >= 2"
        if tau != d - 2:
            return False, f"runs only at time diam-2 = {d - 2}"
        return True, ""

    return AdviceScheme(
        "even_elect",
        applicable,
        _even_oracle,
        NodeProgram("even_elect", _even_program),
        lambda tree: centre(tree).diameter - 2,
    )


# ---------------------------------------------------------------------------
# Scheme: OddElect (odd diameter, time D - 2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OddAdvice:
    d: int
    separated: bool
    j: int  # 1-based index into the sorted list
    k: int  # longest equal prefix of the two j-th sequences
    m: int  # (k+1)-th port of the distinguishing sequence
    p: int  # port from the non-elected endpoint to the elected one

    def encode(self) -> str:
        return (
            gamma_encode(self.d)
            + ("1" if self.separated else "0")
            + gamma_encode(self.j)
            + uint_encode(self.k)
            + uint_encode(self.m)
            + uint_encode(self.p)
        )

    @classmethod
    def decode(cls, bits: str) -> "OddAdvice":
        r = BitReader(bits)
        return cls(
            r.read_gamma(),
            r.read_bit() == 1,
            r.read_gamma(),
            r.read_uint(),
            r.read_uint(),
            r.read_uint(),
        )


def tree_is_separated(tree: PortTree) -> bool:
    """A tree is separated when every node with endless paths in its view
    at radius D-2 has its gateway across the central edge."""
    cen = centre(tree)
    if not cen.is_edge:
        raise EvenDiameterError("separated is defined for odd diameter")
    c0, c1 = cen.nodes
    d = cen.diameter
    for v in range(tree.n):
        view = extract_view(tree, v, d - 2)
        if not endless_endpoints(view):
            continue
        g = view.source_node(gateway(view))
        path = _tree_path(tree, v, g)
        if not _contains_edge(path, c0, c1):
            return False
    return True


def _tree_path(tree: PortTree, a: int, b: int) -> list[int]:
    from .tree import path_nodes

    return path_nodes(tree, a, b)


def _contains_edge(path, x, y) -> bool:
    return any(
        (u == x and w == y) or (u == y and w == x) for u, w in zip(path, path[1:])
    )


def odd_central_lists(tree: PortTree):
    """(separated, c0, c1, L0, L1) for an odd-diameter tree.

    Separated lists hold the complete port sequences of all paths leaving
    the endpoint on its own side; non-separated lists hold every sequence
    of length at most 2h-1 readable from the endpoint, odd-length dangling
    prefixes included.
    """
    cen = centre(tree)
    if not cen.is_edge:
        raise EvenDiameterError("central lists require odd diameter")
    c0, c1 = cen.nodes
    d = cen.diameter
    h = (d - 1) // 2
    separated = tree_is_separated(tree)
    ports = _tree_ports(tree)
    if separated:
        lists = [
            _complete_sequences(ports, c, avoid=frozenset((c0, c1))) for c in (c0, c1)
        ]
    else:
        lists = [_prefix_sequences(ports, c, 2 * h - 1) for c in (c0, c1)]
    return separated, c0, c1, lists[0], lists[1]


def build_odd_advice(tree: PortTree) -> OddAdvice:
    separated, c0, c1, l0, l1 = odd_central_lists(tree)
    d = centre(tree).diameter
    pick = _pick_distinguisher(l0, l1)
    if pick is None:
        raise ListsEqualError("endpoint lists coincide; election needs more time")
    i, j, k, m = pick
    ci = (c0, c1)[i]
    cother = (c0, c1)[1 - i]
    p = next(p for p, (w, _) in enumerate(tree.adj[cother]) if w == ci)
    return OddAdvice(d, separated, j, k, m, p)


def _pick_distinguisher(l0, l1):
    """First list position where the sorted lists differ; the chosen side's
    j-th sequence is absent from the other list, side 0 preferred."""
    set0, set1 = set(l0), set(l1)
    for idx in range(max(len(l0), len(l1))):
        a = l0[idx] if idx < len(l0) else None
        b = l1[idx] if idx < len(l1) else None
        if a == b:
            continue
        candidates = []
        if a is not None and a not in set1:
            candidates.append(0)
        if b is not None and b not in set0:
            candidates.append(1)
        i = min(candidates)
        mine = a if i == 0 else b
        other = b if i == 0 else a
        k = 0
        if other is not None:
            while k < len(mine) and k < len(other) and mine[k] == other[k]:
                k += 1
        return i, idx + 1, k, mine[k]
    return None


def _odd_program(view: View, advice: str) -> tuple[int, ...]:
    adv = OddAdvice.decode(advice)
    d = adv.d
    h = (d - 1) // 2
    ends = endless_endpoints(view)
    if not ends:
        t, me = view_to_tree(view)
        cen = centre(t)
        x, y = cen.nodes
        dist_x = len(_tree_path(t, me, x)) - 1
        dist_y = len(_tree_path(t, me, y)) - 1
        cand_t, other_t = (x, y) if dist_x < dist_y else (y, x)
        ports = _tree_ports(t)
        if adv.separated:
            l_v = _complete_sequences(ports, cand_t, avoid=frozenset((x, y)))
        else:
            l_v = _prefix_sequences(ports, cand_t, 2 * h - 1)
        elect_mine = _check_distinguisher(l_v, adv)
        out = list(outgoing_to(t, cand_t)[me])
    else:
        g = gateway(view)
        dist_g = view.distances_from(g)
        ell = h - 1 if max(dist_g) > dist_g[0] else h
        gpath = view.path_to_root(g)
        cand = gpath[ell]
        ports = _view_ports(view)
        if adv.separated:
            # the edge continuing towards the gateway lies on every endless
            # path, and in a separated tree it is the central edge
            nxt = gpath[ell + 1]
            l_v = _complete_sequences(ports, cand, avoid=frozenset((cand, nxt)))
        else:
            l_v = _prefix_sequences(ports, cand, 2 * h - 1)
        elect_mine = _check_distinguisher(l_v, adv)
        out = list(outgoing_ports(view.seq_of_path(gpath[: ell + 1])))
    if not elect_mine:
        out.append(adv.p)
    return tuple(out)


def _check_distinguisher(l_v, adv: OddAdvice) -> bool:
    if adv.j > len(l_v):
        return False
    seq = l_v[adv.j - 1]
    return adv.k < len(seq) and seq[adv.k] == adv.m


def _odd_oracle(tree: PortTree, tau: int) -> str:
    return build_odd_advice(tree).encode()


def odd_elect_scheme() -> AdviceScheme:
    def applicable(tree, tau):
        d = centre(tree).diameter
        if d % 2 == 0:
            return False, "needs odd diameter"
        if tau != d - 2:
            return False, f"runs only at time D-2 = {d - 2}"
        return True, ""

    return AdviceScheme(
        "odd_elect",
        applicable,
        _odd_oracle,
        NodeProgram("odd_elect", _odd_program),
        lambda tree: centre(tree).diameter - 2,
    )


# ---------------------------------------------------------------------------
# Scheme: ElectWithTrie (beta*D <= time <= D - 3)
# ---------------------------------------------------------------------------


def pick_scheme_root(tree: PortTree) -> int:
    """Central node for even diameter; for odd, the central-edge endpoint
    whose rooted code (equivalently, signature) is smaller."""
    cen = centre(tree)
    if not cen.is_edge:
        return cen.node
    return canonical_root(tree, cen.nodes)


def _trie_oracle(tree: PortTree, tau: int) -> str:
    d = centre(tree).diameter
    h = d // 2
    span = tau - (d + 1) // 2
    if span < 1 or tau > d - 3:
        raise TimeOutOfRangeError(f"time {tau} outside the trie regime for D={d}")
    root = pick_scheme_root(tree)
    reps = compute_reps(tree, root, span)
    ports = _tree_ports(tree)
    items = []
    for r in reps:
        ball = _ball_sequences(ports, r, h)
        target = tuple(_seq_between(tree, r, root))
        z = ball.index(target) + 1
        items.append((view_fingerprint(extract_view(tree, r, h)), z))
    try:
        tr = build_trie(items)
    except DuplicateStringsError as exc:
        raise XiTooLargeError(
            "representatives share a view; election needs more time"
        ) from exc
    return gamma_encode(d) + gamma_encode(tau) + serialize_trie(tr)


def _seq_between(tree: PortTree, a: int, b: int):
    from .tree import seq_between

    return seq_between(tree, a, b)


def _trie_program(view: View, advice: str) -> tuple[int, ...]:
    r = BitReader(advice)
    d = r.read_gamma()
    tau = r.read_gamma()
    tr = deserialize_trie(r)
    h = d // 2
    if not endless_endpoints(view):
        t, me = view_to_tree(view)
        return outgoing_to(t, pick_scheme_root(t))[me]
    rep = find_rep(view, d, tau)
    s = view_fingerprint(extract_subview(view, rep, h))
    z = retrieve(tr, s)
    ports = _view_ports(view)
    ball = _ball_sequences(ports, rep, h)
    target = ball[z - 1]
    # trace the advised sequence from the representative
    p2 = [rep]
    for i in range(0, len(target), 2):
        p2.append(view.adj[p2[-1]][target[i]][0])
    p1 = _view_path(view, 0, rep)
    while len(p1) >= 2 and len(p2) >= 2 and p1[-2] == p2[1]:
        p1.pop()
        p2.pop(0)
    walk = p1 + p2[1:]
    return outgoing_ports(view.seq_of_path(walk))


def trie_scheme(beta: float = 0.7) -> AdviceScheme:
    if beta <= 0.5:
        raise TimeOutOfRangeError("beta must exceed 1/2")

    def applicable(tree, tau):
        d = centre(tree).diameter
        if d < 6:
            return False, "diameter too small for the trie regime"
        if tau < beta * d or tau > d - 3:
            return False, f"time outside [beta*D, D-3] = [{beta * d:.1f}, {d - 3}]"
        if tau - (d + 1) // 2 < 1:
            return False, "time leaves no room below the centre"
        return True, ""

    return AdviceScheme(
        "trie",
        applicable,
        _trie_oracle,
        NodeProgram("trie", _trie_program),
        lambda tree: centre(tree).diameter - 3,
    )


# ---------------------------------------------------------------------------
# Scheme: full canonical code (any time >= xi, advice O(n))
# ---------------------------------------------------------------------------


def encode_full_code(tree: PortTree) -> str:
    """gamma(n), then the raw 2(n-1) walk bits, then each entry port in
    ceil(log2 deg) bits with degrees recovered from the walk."""
    code = canonical_code(tree)
    n = tree.n
    parts = [gamma_encode(n), "".join("01"[b] for b in code.phi)]
    degs = _degrees_from_phi(code.phi)
    for i, port in enumerate(code.psi):
        w = (degs[i + 1] - 1).bit_length() if degs[i + 1] > 1 else 0
        if w:
            parts.append(format(port, f"0{w}b"))
    return "".join(parts)


def _degrees_from_phi(phi):
    """Degree of each node (in first-visit order) of the encoded tree."""
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
    return [
        cnt + (1 if i > 0 else 0) for i, cnt in enumerate(child_count)
    ]


def decode_full_code(bits: str) -> PortTree:
    r = BitReader(bits)
    n = r.read_gamma()
    phi = tuple(int(b) for b in r.read_bits(2 * (n - 1)))
    degs = _degrees_from_phi(phi)
    psi = []
    for i in range(1, n):
        w = (degs[i] - 1).bit_length() if degs[i] > 1 else 0
        psi.append(r.read_fixed(w))
    return decode_code(TreeCode(phi, tuple(psi)))


def _full_code_oracle(tree: PortTree, tau: int) -> str:
    _require_asymmetric(tree)
    return encode_full_code(tree)


_full_code_tables: dict[tuple[str, int], dict] = {}


def _full_code_table(advice: str, tau: int) -> dict:
    """Class table (canonical view -> output) shared by all nodes holding
    the same advice; reproduces the feasibility semantics of xi on the map."""
    key = (advice, tau)
    table = _full_code_tables.get(key)
    if table is None:
        t = decode_full_code(advice)
        classes = view_classes(t, tau)
        leaders = feasible_leaders(t, tau, classes)
        if not leaders:
            raise TimeTooShortError(f"map admits no leader at time {tau}")
        leader = canonical_root(t, leaders)
        seqs = outgoing_to(t, leader)
        table = {canon: seqs[members[0]] for canon, members in classes.items()}
        _full_code_tables[key] = table
    return table


def _full_code_program(view: View, advice: str) -> tuple[int, ...]:
    table = _full_code_table(advice, view.radius)
    return table[view.canonical()]


def full_code_scheme() -> AdviceScheme:
    def applicable(tree, tau):
        if is_symmetric(tree):
            return False, "symmetric"
        return True, ""

    return AdviceScheme(
        "full_code",
        applicable,
        _full_code_oracle,
        NodeProgram("full_code", _full_code_program),
        lambda tree: centre(tree).diameter,
    )


ALL_SCHEMES: dict[str, Callable[[], AdviceScheme]] = {
    "full_view": full_view_scheme,
    "diam_minus_1": diam_minus_1_scheme,
    "even_elect": even_elect_scheme,
    "odd_elect": odd_elect_scheme,
    "trie": trie_scheme,
    "full_code": full_code_scheme,
}
