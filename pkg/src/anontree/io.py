"""Text formats: tree files and debug view dumps.

Tree file: first line ``tree <n>``, then one line per node (node i on the
i-th line) holding deg(i) tokens ``p:j:q`` in increasing p, meaning port
p at node i reaches node j whose reverse port is q.  Lines starting with
``#`` are ignored.  Loading re-validates every invariant.
"""

from __future__ import annotations

from .tree import PortTree, ValidationError
from .views import View


def dump_tree(tree: PortTree) -> str:
    lines = [f"tree {tree.n}"]
    for v in range(tree.n):
        lines.append(
            " ".join(f"{p}:{w}:{q}" for p, (w, q) in enumerate(tree.adj[v]))
        )
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> PortTree:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("tree "):
        raise ValidationError("tree file must start with 'tree <n>'")
    n = int(lines[0].split()[1])
    if len(lines) != n + 1:
        raise ValidationError(f"expected {n} node lines, found {len(lines) - 1}")
    maps: list[dict[int, tuple[int, int]]] = []
    for v in range(n):
        entries: dict[int, tuple[int, int]] = {}
        if lines[v + 1]:
            for token in lines[v + 1].split():
                p, w, q = (int(x) for x in token.split(":"))
                if p in entries:
                    raise ValidationError(f"node {v} repeats port {p}")
                entries[p] = (w, q)
        maps.append(entries)
    return PortTree.from_port_maps(maps)


def load_tree(path) -> PortTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(fh.read())


def save_tree(tree: PortTree, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_tree(tree))


def dump_view(view: View) -> str:
    """Debug dump: the partial adjacency plus root, radius and frontier."""
    lines = [f"view {view.size} {view.radius}", "root 0"]
    for i in range(view.size):
        tokens = " ".join(
            f"{p}:{w}:{q}" for p, (w, q) in sorted(view.adj[i].items())
        )
        lines.append(tokens)
    for i in range(view.size):
        if view.deg[i] != len(view.adj[i]):
            lines.append(f"frontier {i} {view.deg[i]}")
    return "\n".join(lines) + "\n"


def parse_view(text: str) -> View:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    head = lines[0].split()
    if head[0] != "view":
        raise ValidationError("view file must start with 'view <m> <radius>'")
    m, radius = int(head[1]), int(head[2])
    if lines[1] != "root 0":
        raise ValidationError("view file must declare 'root 0'")
    adj: list[dict[int, tuple[int, int]]] = []
    for i in range(m):
        entries: dict[int, tuple[int, int]] = {}
        if lines[2 + i]:
            for token in lines[2 + i].split():
                p, w, q = (int(x) for x in token.split(":"))
                entries[p] = (w, q)
        adj.append(entries)
    deg = [len(e) for e in adj]
    for ln in lines[2 + m :]:
        parts = ln.split()
        if parts[0] != "frontier":
            raise ValidationError(f"unexpected line {ln!r}")
        deg[int(parts[1])] = int(parts[2])
    parent = [-1] * m
    depth = [0] * m
    seen = {0}
    order = [0]
    while order:
        v = order.pop()
        for w, _ in adj[v].values():
            if w not in seen:
                seen.add(w)
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
    return View(radius, adj, deg, parent, depth, None)
