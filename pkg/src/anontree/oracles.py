"""Ground-truth feasibility: the parameter xi and map-based election.

xi(T) is the least radius r at which election is feasible when every node
holds a faithful unmarked map of T.  Given the map, a node's output after
r rounds is a function of its radius-r view, and any valid output equals
the outgoing ports of its unique path to the leader; so feasibility at r
means: some leader c gives every views-equal class a single common output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tree import PortTree, TreeError, bfs_parents, is_symmetric, rooted_code
from .views import extract_view


class SymmetricTreeError(TreeError):
    pass


class TimeTooShortError(TreeError):
    pass


def view_classes(tree: PortTree, r: int) -> dict:
    """Partition of the nodes into views-equal classes at radius r."""
    classes: dict = {}
    for v in range(tree.n):
        classes.setdefault(extract_view(tree, v, r).canonical(), []).append(v)
    return classes


def outgoing_to(tree: PortTree, target: int) -> list[tuple[int, ...]]:
    """Outgoing-port sequence of path(v, target) for every node v."""
    parent, port_up, _, _, order = bfs_parents(tree, target)
    seqs: list[tuple[int, ...] | None] = [None] * tree.n
    seqs[target] = ()
    for v in order[1:]:
        seqs[v] = (port_up[v],) + seqs[parent[v]]
    return seqs  # type: ignore[return-value]


def feasible_leaders(tree: PortTree, r: int, classes=None, first_only=False) -> list[int]:
    """Nodes c for which every views-equal class at radius r shares the
    outgoing ports of its members' paths to c."""
    if classes is None:
        classes = view_classes(tree, r)
    nontrivial = [members for members in classes.values() if len(members) > 1]
    found = []
    for c in range(tree.n):
        seqs = None
        ok = True
        for members in nontrivial:
            if seqs is None:
                seqs = outgoing_to(tree, c)
            first = seqs[members[0]]
            if any(seqs[v] != first for v in members[1:]):
                ok = False
                break
        if ok:
            found.append(c)
            if first_only:
                return found
    return found


def feasible_at(tree: PortTree, r: int) -> bool:
    return bool(feasible_leaders(tree, r, first_only=True))


@dataclass(frozen=True)
class FeasibilityResult:
    """xi with its certificate: the chosen leader and the class table
    (canonical view -> common output) at radius xi."""

    xi: int | None
    leader: int | None = None
    table: dict = field(default_factory=dict, compare=False)
    class_counts: tuple[int, ...] = ()

    @property
    def infeasible(self) -> bool:
        return self.xi is None

    def to_record(self) -> dict:
        return {
            "xi": self.xi,
            "leader": self.leader,
            "classes_per_radius": list(self.class_counts),
        }


def canonical_root(tree: PortTree, candidates=None) -> int:
    """Deterministic, indexing-invariant node choice: the candidate whose
    rooted DFS code is lexicographically smallest.  For a fixed node count
    this is exactly the smaller-signature order."""
    best = None
    best_root = -1
    pool = range(tree.n) if candidates is None else candidates
    for root in pool:
        code = rooted_code(tree, root)
        if best is None or code < best:
            best = code
            best_root = root
    if best_root < 0:
        raise TreeError("no candidate roots")
    return best_root


def xi(tree: PortTree) -> FeasibilityResult:
    """Brute-force xi: scan radii upward until a feasible leader exists.

    Infeasible exactly for symmetric trees; every non-symmetric tree is
    feasible by radius diam - 1, so the scan terminates.
    """
    if is_symmetric(tree):
        return FeasibilityResult(None)
    counts = []
    r = 0
    while True:
        classes = view_classes(tree, r)
        counts.append(len(classes))
        leaders = feasible_leaders(tree, r, classes)
        if leaders:
            leader = canonical_root(tree, leaders)
            seqs = outgoing_to(tree, leader)
            table = {canon: seqs[members[0]] for canon, members in classes.items()}
            return FeasibilityResult(r, leader, table, tuple(counts))
        r += 1
        if r > tree.n:
            raise TreeError("feasibility scan failed to terminate")


def map_based_election(tree: PortTree, tau: int) -> tuple[tuple[int, ...], ...]:
    """Outputs of the canonical map-based election at time tau.

    Picks the feasible leader with the smallest rooted code and has every
    node output the outgoing ports of its path to it; outputs are constant
    on views-equal classes at radius tau by construction.
    """
    if is_symmetric(tree):
        raise SymmetricTreeError("symmetric trees admit no leader")
    leaders = feasible_leaders(tree, tau)
    if not leaders:
        raise TimeTooShortError(f"election infeasible at time {tau}")
    leader = canonical_root(tree, leaders)
    return tuple(outgoing_to(tree, leader))
