"""Execution semantics of synchronous LOCAL elections with advice.

A deterministic node program running for tau rounds is a pure function of
(view at radius tau, advice); ``run_election`` evaluates it at every node
of a tree and verifies the election condition: every output must trace a
simple path and all paths must end at one common node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .tree import PortTree
from .views import View, extract_view

ProgramFn = Callable[[View, str], tuple[int, ...]]
OracleFn = Callable[[PortTree, int], str]


@dataclass(frozen=True)
class NodeProgram:
    name: str
    run: ProgramFn


@dataclass(frozen=True)
class VerifyResult:
    leader: int | None
    failure: str | None = None
    node: int | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


@dataclass(frozen=True)
class ElectionOutcome:
    outputs: tuple[tuple[int, ...], ...]
    leader: int | None
    failure: str | None
    failed_node: int | None
    rounds: int
    advice: str

    @property
    def ok(self) -> bool:
        return self.failure is None

    @property
    def advice_bits(self) -> int:
        return len(self.advice)

    def to_record(self) -> dict:
        return {
            "outputs": [list(o) for o in self.outputs],
            "leader": self.leader,
            "failure": self.failure,
            "failed_node": self.failed_node,
            "rounds": self.rounds,
            "advice_bits": self.advice_bits,
        }


def verify_outcome(tree: PortTree, outputs) -> VerifyResult:
    """Trace every claimed path; report the common endpoint or the failure."""
    endpoints = []
    for v, out in enumerate(outputs):
        current = v
        visited = {v}
        for port in out:
            if port < 0 or port >= tree.degree(current):
                return VerifyResult(None, "InvalidPort", v)
            current, _ = tree.neighbor(current, port)
            if current in visited:
                return VerifyResult(None, "NotSimple", v)
            visited.add(current)
        endpoints.append(current)
    leader = endpoints[0]
    for v, e in enumerate(endpoints):
        if e != leader:
            return VerifyResult(None, "NoCommonLeader", v)
    return VerifyResult(leader)


def run_election(
    tree: PortTree, program: NodeProgram, oracle: OracleFn, tau: int
) -> ElectionOutcome:
    """Compute advice once from the whole tree, run the program on every
    node's radius-tau view, and verify the joint outcome."""
    advice = oracle(tree, tau)
    outputs = []
    for v in range(tree.n):
        view = extract_view(tree, v, tau)
        try:
            outputs.append(tuple(program.run(view, advice)))
        except Exception as exc:  # noqa: BLE001 - program failure is data here
            return ElectionOutcome(
                tuple(outputs), None, f"ProgramError: {exc!r}", v, tau, advice
            )
    result = verify_outcome(tree, outputs)
    return ElectionOutcome(
        tuple(outputs), result.leader, result.failure, result.node, tau, advice
    )


# ---------------------------------------------------------------------------
# Message-passing cross-check
# ---------------------------------------------------------------------------


def simulate_rounds(tree: PortTree, tau: int) -> list[View]:
    """Full-information flooding for tau synchronous rounds.

    Each node starts knowing its degree; in every round it exchanges its
    whole knowledge with all neighbours.  The knowledge trees are folded
    back into View objects, giving an independent derivation of V(v, tau).
    """
    n = tree.n
    # knowledge[v] = (degree, tuple of (port, reverse port, neighbour knowledge))
    knowledge: list = [(tree.degree(v), ()) for v in range(n)]
    for _ in range(tau):
        knowledge = [
            (
                tree.degree(v),
                tuple(
                    (p, q, knowledge[w]) for p, (w, q) in enumerate(tree.adj[v])
                ),
            )
            for v in range(n)
        ]
    return [_knowledge_to_view(knowledge[v], tau) for v in range(n)]


def _knowledge_to_view(know, tau: int) -> View:
    adj: list[dict[int, tuple[int, int]]] = [{}]
    deg = [know[0]]
    parent = [-1]
    depth = [0]
    # descend non-backtracking; entries: (knowledge, view index, entry port)
    stack = [(know, 0, -1)]
    while stack:
        node, iv, entry = stack.pop()
        if depth[iv] == tau:
            continue
        for p, q, child in node[1]:
            if p == entry:
                continue
            iw = len(adj)
            adj.append({})
            deg.append(child[0])
            parent.append(iv)
            depth.append(depth[iv] + 1)
            adj[iv][p] = (iw, q)
            adj[iw][q] = (iv, p)
            stack.append((child, iw, q))
    return View(tau, adj, deg, parent, depth, None)
