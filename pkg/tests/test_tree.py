import itertools
import random

import pytest

from anontree.generators import gen_path, gen_random
from anontree.tree import (
    AsymmetricAdjacencyError,
    Centre,
    HasCycleError,
    NotConnectedError,
    PortGapError,
    PortTree,
    TreeCode,
    canonical_code,
    centre,
    decode_code,
    distance,
    is_symmetric,
    outgoing_ports,
    path_and_seq,
    rooted_code,
    seq_between,
    validate,
)
from anontree.views import signature

from conftest import (
    all_rooted_port_trees,
    brute_diameter,
    brute_is_symmetric,
    brute_path,
    mirror_tree,
    random_relabel,
)

EDGE = [{0: (1, 0)}, {0: (0, 0)}]


def test_validate_single_edge():
    validate(PortTree.from_port_maps(EDGE))


def test_validate_asymmetric_adjacency():
    with pytest.raises(AsymmetricAdjacencyError):
        PortTree.from_port_maps([{0: (1, 1)}, {0: (0, 0)}, ][:2] + [])
    with pytest.raises(AsymmetricAdjacencyError):
        PortTree.from_port_maps([{0: (1, 0)}, {0: (2, 0)}, {0: (1, 0)}])


def test_validate_port_gap():
    maps = [{0: (1, 0)}, {0: (0, 0), 2: (2, 0)}, {0: (1, 2)}]
    with pytest.raises(PortGapError):
        PortTree.from_port_maps(maps)


def test_validate_not_connected():
    maps = [{0: (1, 0)}, {0: (0, 0)}, {0: (3, 0)}, {0: (2, 0)}]
    with pytest.raises(NotConnectedError):
        PortTree.from_port_maps(maps)


def test_validate_cycle():
    maps = [
        {0: (1, 0), 1: (2, 0)},
        {0: (0, 0), 1: (2, 1)},
        {0: (0, 1), 1: (1, 1)},
    ]
    with pytest.raises(HasCycleError):
        PortTree.from_port_maps(maps)


def test_path_and_seq_trivial():
    t = PortTree.from_port_maps(EDGE)
    path, seq = path_and_seq(t, 0, 0)
    assert path == [0] and seq == ()


def test_path_family_seq_matches_construction():
    # stated port pattern of the lower-bound path family at k = 5
    t5 = gen_path(5)
    assert seq_between(t5, 0, 5) == (0, 0, 1, 0, 1, 0, 1, 0, 1, 0)
    assert outgoing_ports(seq_between(t5, 0, 5)) == (0, 1, 1, 1, 1)


def test_seq_reversal_and_brute_path():
    for seed in range(5):
        t = gen_random(20, seed)
        rng = random.Random(seed)
        for _ in range(10):
            a, b = rng.randrange(20), rng.randrange(20)
            path, seq = path_and_seq(t, a, b)
            assert path == brute_path(t, a, b)
            assert len(seq) == 2 * (len(path) - 1)
            assert seq_between(t, b, a) == tuple(reversed(seq))


@pytest.mark.parametrize("length,is_edge", [(4, False), (5, True)])
def test_centre_paths(length, is_edge):
    t = gen_path(length)
    cen = centre(t)
    assert cen.diameter == length
    assert cen.is_edge == is_edge
    if not is_edge:
        # middle of the only diametral path
        assert distance(t, cen.node, 0) == length // 2


def test_centre_matches_brute_diameter(small_random_trees):
    for t in small_random_trees:
        assert centre(t).diameter == brute_diameter(t)


def test_rooted_code_examples():
    single = PortTree.from_port_maps([{}])
    assert rooted_code(single, 0) == TreeCode((), ())

    edge = PortTree.from_port_maps(EDGE)
    assert rooted_code(edge, 0) == TreeCode((0, 1), (0,))

    star = PortTree.from_port_maps(
        [{0: (1, 0), 1: (2, 0), 2: (3, 0)}, {0: (0, 0)}, {0: (0, 1)}, {0: (0, 2)}]
    )
    assert rooted_code(star, 0) == TreeCode((0, 1, 0, 1, 0, 1), (0, 0, 0))


def test_decode_round_trip(small_random_trees):
    for t in small_random_trees:
        for root in range(0, t.n, 3):
            code = rooted_code(t, root)
            rebuilt = decode_code(code)
            assert rooted_code(rebuilt, 0) == code
            assert canonical_code(rebuilt) == canonical_code(t)


def test_canonical_code_index_invariance(small_random_trees):
    for t in small_random_trees[:6]:
        base = canonical_code(t)
        for seed in range(20):
            assert canonical_code(random_relabel(t, seed)) == base


def test_canonical_code_detects_nonisomorphic():
    # same shape, genuinely different port words along a 4-node path
    a = PortTree.from_port_maps(
        [{0: (1, 0)}, {0: (0, 0), 1: (2, 1)}, {0: (3, 0), 1: (1, 1)}, {0: (2, 0)}]
    )
    b = PortTree.from_port_maps(
        [{0: (1, 0)}, {0: (0, 0), 1: (2, 0)}, {0: (1, 1), 1: (3, 0)}, {0: (2, 1)}]
    )
    assert canonical_code(a) != canonical_code(b)


def test_canonical_code_equal_iff_isomorphic_small():
    # pair up every rooted port tree on <= 4 nodes as unrooted trees;
    # canonical codes must collide exactly when some relabeling matches
    trees = [decode_code(c) for c in all_rooted_port_trees(4)]
    by_code = {}
    for t in trees:
        by_code.setdefault(canonical_code(t), []).append(t)
    def matches(first, other, perm):
        for v in range(first.n):
            if other.degree(perm[v]) != first.degree(v):
                return False
            for p, (w, q) in enumerate(first.adj[v]):
                if other.adj[perm[v]][p] != (perm[w], q):
                    return False
        return True

    for code, group in by_code.items():
        first = group[0]
        for other in group[1:]:
            assert first.n == other.n
            # explicit isomorphism search: some relabeling equates them
            assert any(
                matches(first, other, perm)
                for perm in itertools.permutations(range(first.n))
            )


def test_signature_fixed_length_and_injective_small():
    seen = {}
    count = 0
    length = None
    for code in all_rooted_port_trees(5):
        t = decode_code(code)
        sig = signature(t, 0, 5)
        if length is None:
            length = len(sig)
        assert len(sig) == length
        assert sig not in seen, f"collision between {code} and {seen[sig]}"
        seen[sig] = code
        count += 1
    assert count == len(seen)


def test_signature_equal_for_identical_and_symmetric_halves():
    t = gen_random(9, 3)
    assert signature(t, 4, 20) == signature(t, 4, 20)
    sym = mirror_tree(t, 2)
    assert signature(sym, 2, 20) != signature(sym, 3, 20)
    # the two central-edge endpoints of a mirrored tree see identical trees
    cen = centre(sym)
    assert cen.is_edge
    c0, c1 = cen.nodes
    assert signature(sym, c0, 20) == signature(sym, c1, 20)


def test_signature_bound_exceeded():
    from anontree.views import BoundExceededError

    t = gen_random(10, 0)
    with pytest.raises(BoundExceededError):
        signature(t, 0, 9)


def test_is_symmetric_examples():
    assert is_symmetric(PortTree.from_port_maps(EDGE))
    # any even-diameter tree is asymmetric
    assert not is_symmetric(gen_path(4))
    # path of length 3: symmetric iff the port word is a palindrome
    sym = PortTree.from_port_maps(
        [{0: (1, 0)}, {0: (0, 0), 1: (2, 1)}, {0: (3, 0), 1: (1, 1)}, {0: (2, 0)}]
    )
    assert seq_between(sym, 0, 3) == (0, 0, 1, 1, 0, 0)
    assert is_symmetric(sym)
    asym = PortTree.from_port_maps(
        [{0: (1, 0)}, {0: (0, 0), 1: (2, 0)}, {0: (1, 1), 1: (3, 0)}, {0: (2, 1)}]
    )
    assert seq_between(asym, 0, 3) == (0, 0, 1, 0, 0, 0)
    assert not is_symmetric(asym)


def test_is_symmetric_matches_brute_force():
    trees = [gen_random(n, seed) for n in (2, 3, 4, 5, 6, 7, 8) for seed in range(6)]
    trees += [mirror_tree(gen_random(4, s), s % 4) for s in range(6)]
    for t in trees:
        assert is_symmetric(t) == brute_is_symmetric(t), t.adj


def test_single_node_degenerate():
    t = PortTree.from_port_maps([{}])
    cen = centre(t)
    assert cen == Centre(0, (0,))
    assert canonical_code(t) == TreeCode((), ())
    assert not is_symmetric(t)
