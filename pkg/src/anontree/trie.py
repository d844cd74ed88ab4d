"""Skip-compressed binary trie over distinct bit strings.

Internal nodes carry the length of the common prefix of the strings below
them (an absolute position within the remaining suffix); leaves carry the
stored value.  Built strings must be pairwise distinct and none may be a
proper prefix of another.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import BitReader, gamma_encode, uint_encode


class TrieError(Exception):
    pass


class DuplicateStringsError(TrieError):
    pass


@dataclass(frozen=True)
class TrieNode:
    label: int
    left: "TrieNode | None" = None
    right: "TrieNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


def build_trie(items: list[tuple[str, int]]) -> TrieNode:
    """Build the trie for (bit string, value) pairs."""
    if not items:
        raise TrieError("cannot build a trie over no strings")
    if len({s for s, _ in items}) != len(items):
        raise DuplicateStringsError("strings must be pairwise distinct")
    return _build(items)


def _build(items: list[tuple[str, int]]) -> TrieNode:
    if len(items) == 1:
        return TrieNode(items[0][1])
    j = 0
    first = items[0][0]
    while all(len(s) > j and s[j] == first[j] for s, _ in items):
        j += 1
    if any(len(s) <= j for s, _ in items):
        raise DuplicateStringsError("one string is a prefix of another")
    zeros = [(s[j + 1 :], z) for s, z in items if s[j] == "0"]
    ones = [(s[j + 1 :], z) for s, z in items if s[j] == "1"]
    return TrieNode(j, _build(zeros), _build(ones))


def retrieve(trie: TrieNode, s: str) -> int:
    """Value stored at the leaf matching s, for s among the built strings."""
    node = trie
    while not node.is_leaf:
        j = node.label
        if j >= len(s):
            raise TrieError("string exhausted during retrieval")
        node = node.left if s[j] == "0" else node.right
        s = s[j + 1 :]
    return node.label


def node_count(trie: TrieNode) -> int:
    if trie.is_leaf:
        return 1
    return 1 + node_count(trie.left) + node_count(trie.right)


def leaf_count(trie: TrieNode) -> int:
    if trie.is_leaf:
        return 1
    return leaf_count(trie.left) + leaf_count(trie.right)


def serialize_trie(trie: TrieNode) -> str:
    """Preorder bit encoding: flag (1 = leaf), gamma-coded label, children.

    Leaf values are 1-based list indices, written as gamma(value); internal
    labels are 0-based string positions, written as gamma(label + 1).
    """
    if trie.is_leaf:
        return "1" + gamma_encode(trie.label)
    return (
        "0"
        + uint_encode(trie.label)
        + serialize_trie(trie.left)
        + serialize_trie(trie.right)
    )


def deserialize_trie(reader: BitReader) -> TrieNode:
    if reader.read_bit() == 1:
        return TrieNode(reader.read_gamma())
    label = reader.read_uint()
    left = deserialize_trie(reader)
    right = deserialize_trie(reader)
    return TrieNode(label, left, right)
