"""The abstract pair-breaking game.

Pairs (a, b) with a < b <= Z are coloured; a symmetry-breaking function
B : {1..Z} x {1..c} -> {0, 1} must satisfy B(a, g) != B(b, g) at each
pair's own colour g.  Per colour, these constraints are exactly a proper
2-colouring of the graph whose edges are that colour's pairs, so a
breaker exists iff every colour class is bipartite.  An independent
backtracking search over candidate functions double-checks that reduction
at small sizes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


class PairBreakingError(Exception):
    pass


class NoBreakerError(PairBreakingError):
    pass


class TooLargeError(PairBreakingError):
    pass


@dataclass(frozen=True)
class PairColouring:
    z: int
    colours: int
    mapping: tuple[tuple[int, int, int], ...]  # (a, b, colour), a < b

    def __post_init__(self):
        pairs = {(a, b) for a, b, _ in self.mapping}
        expected = {(a, b) for a in range(1, self.z + 1) for b in range(a + 1, self.z + 1)}
        if pairs != expected:
            raise PairBreakingError("colouring must cover every pair exactly once")
        if any(not (1 <= g <= self.colours) for _, _, g in self.mapping):
            raise PairBreakingError("colour out of range")

    @classmethod
    def from_dict(cls, z: int, colours: int, d: dict) -> "PairColouring":
        return cls(z, colours, tuple(sorted((a, b, g) for (a, b), g in d.items())))

    def colour_of(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        for x, y, g in self.mapping:
            if (x, y) == (a, b):
                return g
        raise KeyError((a, b))

    def classes(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for a, b, g in self.mapping:
            out.setdefault(g, []).append((a, b))
        return out


def exists_breaker(col: PairColouring):
    """Breaker via the per-colour bipartiteness criterion, or None.

    For each colour, two-colours the graph of that colour's pairs; a
    conflict on any component means no breaker exists at all.
    """
    breaker: dict[tuple[int, int], int] = {}
    for g in range(1, col.colours + 1):
        adj: dict[int, list[int]] = {v: [] for v in range(1, col.z + 1)}
        for a, b, gg in col.mapping:
            if gg == g:
                adj[a].append(b)
                adj[b].append(a)
        side = {}
        for start in range(1, col.z + 1):
            if start in side:
                continue
            side[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for w in adj[v]:
                    if w not in side:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        for v in range(1, col.z + 1):
            breaker[(v, g)] = side[v]
    return breaker


def exists_breaker_exhaustive(col: PairColouring, cell_limit: int = 24):
    """Independent search for a breaker over the raw function space.

    Depth-first over the Z*c table cells, rejecting as soon as some pair's
    constraint is violated; never reasons about graph structure.
    """
    cells = [(v, g) for v in range(1, col.z + 1) for g in range(1, col.colours + 1)]
    if len(cells) > cell_limit:
        raise TooLargeError(f"{len(cells)} cells exceed the search bound {cell_limit}")
    constraints: dict[tuple[int, int], list[tuple[int, int]]] = {c: [] for c in cells}
    for a, b, g in col.mapping:
        constraints[(a, g)].append((b, g))
        constraints[(b, g)].append((a, g))
    assign: dict[tuple[int, int], int] = {}

    def search(i: int):
        if i == len(cells):
            return dict(assign)
        cell = cells[i]
        for value in (0, 1):
            ok = True
            for other in constraints[cell]:
                if assign.get(other) == value:
                    ok = False
                    break
            if not ok:
                continue
            assign[cell] = value
            found = search(i + 1)
            if found is not None:
                return found
            del assign[cell]
        return None

    return search(0)


def is_breaker(col: PairColouring, breaker) -> bool:
    return all(breaker[(a, g)] != breaker[(b, g)] for a, b, g in col.mapping)


def _canonical_colourings(z: int, colours: int):
    """All colourings in first-occurrence normal form (colour names appear
    in order of first use), pruning the pure renaming symmetry."""
    pairs = [(a, b) for a in range(1, z + 1) for b in range(a + 1, z + 1)]

    def extend(idx: int, used: int, assignment: list[int]):
        if idx == len(pairs):
            if used == colours:
                yield dict(zip(pairs, assignment))
            return
        limit = min(used + 1, colours)
        for g in range(1, limit + 1):
            assignment.append(g)
            yield from extend(idx + 1, max(used, g), assignment)
            assignment.pop()

    yield from extend(0, 0, [])


def min_colours(z: int, method: str = "auto", exhaustive_limit: int = 5) -> int:
    """Minimum number of colours for which some colouring admits a breaker.

    ``exhaustive`` enumerates canonical colourings and tests each with the
    bipartiteness criterion.  ``criterion`` searches the reformulated
    space: a breaker gives every element the 0/1 vector of its table row,
    and the defining property forces all Z rows to be pairwise distinct;
    conversely any Z distinct vectors induce a colouring (first differing
    coordinate) whose classes are bipartite.  So feasibility with c
    colours holds iff {0,1}^c holds Z distinct vectors.
    """
    if z < 2:
        raise PairBreakingError("pair breaking needs Z >= 2")
    if method == "auto":
        method = "exhaustive" if z <= exhaustive_limit else "criterion"
    if method == "criterion":
        c = 1
        while (1 << c) < z:
            c += 1
        return c
    if method != "exhaustive":
        raise PairBreakingError(f"unknown method {method!r}")
    if z > exhaustive_limit:
        raise TooLargeError(f"exhaustive search is limited to Z <= {exhaustive_limit}")
    for c in range(1, math.comb(z, 2) + 1):
        for assignment in _canonical_colourings(z, c):
            col = PairColouring.from_dict(z, c, assignment)
            if exists_breaker(col) is not None:
                return c
    raise PairBreakingError("unreachable: complete colourings always succeed")


def lemma_threshold(k: int) -> int:
    """Subset size from which at least k colours are forced."""
    if k < 2:
        raise PairBreakingError("threshold defined for k >= 2")
    total = 1.5 * math.factorial(k) + sum(
        math.factorial(k) // math.factorial(k - i) for i in range(0, k - 2)
    )
    return math.ceil(total)


def colours_used(col: PairColouring, subset) -> int:
    s = set(subset)
    return len({g for a, b, g in col.mapping if a in s and b in s})


def check_lemma_threshold(k: int, col: PairColouring, subset) -> bool:
    """Whether the subset uses at least k colours; the colouring must admit
    a breaker for the question to be about the lemma at all."""
    if exists_breaker(col) is None:
        raise NoBreakerError("colouring admits no symmetry-breaking function")
    return colours_used(col, subset) >= k
