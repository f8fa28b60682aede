"""Naive reference structures for verifying the randomized trie.

Everything here is deliberately unbalanced and slow: a plain ternary search
trie whose shape is a pure function of insertion order, a plain BST keyed on
whole strings, and the two classic predicates connecting them (the
ancestor/insertion-order equivalence and the sidestep-vs-depth bound).  The
test suite builds these independently and compares shapes and counts against
the real tree.
"""

from __future__ import annotations

from .core import EMPTY_DIGEST, _as_key, shape_digest_of


class TstNode:
    __slots__ = ("char", "is_terminal", "left", "mid", "right")

    def __init__(self, char: int):
        self.char = char
        self.is_terminal = False
        self.left = None
        self.mid = None
        self.right = None


class NaiveTst:
    """Unbalanced ternary search trie. No priorities, no rotations."""

    def __init__(self):
        self.root: TstNode | None = None

    def insert(self, s) -> None:
        key = _as_key(s)
        last = len(key) - 1
        x = self.root
        parent: TstNode | None = None
        link = "mid"
        i = 0
        while True:
            if x is None:
                x = TstNode(key[i])
                if parent is None:
                    self.root = x
                else:
                    setattr(parent, link, x)
            c = key[i]
            if c < x.char:
                parent, link, x = x, "left", x.left
            elif c > x.char:
                parent, link, x = x, "right", x.right
            elif i < last:
                parent, link, x = x, "mid", x.mid
                i += 1
            else:
                x.is_terminal = True
                return

    def contains(self, s) -> bool:
        x = self._locate(_as_key(s))
        return x is not None and x.is_terminal

    def sidesteps(self, s) -> int:
        """Left/right steps on the search path of a member string."""
        key = _as_key(s)
        x = self.root
        i = 0
        last = len(key) - 1
        steps = 0
        while x is not None:
            c = key[i]
            if c < x.char:
                x = x.left
                steps += 1
            elif c > x.char:
                x = x.right
                steps += 1
            elif i < last:
                x = x.mid
                i += 1
            else:
                if not x.is_terminal:
                    break
                return steps
        raise ValueError(f"{s!r} is not a member")

    def shape_digest(self) -> str:
        return shape_digest_of(self.root, None, lambda n: n.is_terminal)

    def _locate(self, key: bytes) -> TstNode | None:
        x = self.root
        i = 0
        last = len(key) - 1
        while x is not None:
            c = key[i]
            if c < x.char:
                x = x.left
            elif c > x.char:
                x = x.right
            elif i < last:
                x = x.mid
                i += 1
            else:
                return x
        return None


class BstNode:
    __slots__ = ("key", "left", "right")

    def __init__(self, key: bytes):
        self.key = key
        self.left = None
        self.right = None


class NaiveBst:
    """Unbalanced binary search tree keyed on whole byte strings."""

    def __init__(self):
        self.root: BstNode | None = None

    def insert(self, s) -> None:
        key = _as_key(s)
        if self.root is None:
            self.root = BstNode(key)
            return
        x = self.root
        while True:
            if key == x.key:
                return
            if key < x.key:
                if x.left is None:
                    x.left = BstNode(key)
                    return
                x = x.left
            else:
                if x.right is None:
                    x.right = BstNode(key)
                    return
                x = x.right

    def contains(self, s) -> bool:
        return self._path_to(_as_key(s)) is not None

    def depth(self, s) -> int:
        """Number of proper ancestors of a member key's node."""
        path = self._path_to(_as_key(s))
        if path is None:
            raise ValueError(f"{s!r} is not a member")
        return len(path) - 1

    def is_ancestor(self, x, y) -> bool:
        """True iff x's node is a proper ancestor of y's node."""
        xk, yk = _as_key(x), _as_key(y)
        ypath = self._path_to(yk)
        if ypath is None or self._path_to(xk) is None:
            raise ValueError("both keys must be members")
        return any(node.key == xk for node in ypath[:-1])

    def _path_to(self, key: bytes) -> list[BstNode] | None:
        path = []
        x = self.root
        while x is not None:
            path.append(x)
            if key == x.key:
                return path
            x = x.left if key < x.key else x.right
        return None


class PrioritizedSet:
    """Distinct strings paired with integer priorities >= 1.

    The canonical input to oracle shape builds.  String uniqueness is
    enforced here; priority uniqueness only matters to shape builds and is
    checked where required.
    """

    def __init__(self, pairs):
        items: list[tuple[bytes, int]] = []
        seen = set()
        for s, p in pairs:
            key = _as_key(s)
            p = int(p)
            if p < 1:
                raise ValueError(f"priority for {key!r} must be >= 1, got {p}")
            if key in seen:
                raise ValueError(f"duplicate string {key!r}")
            seen.add(key)
            items.append((key, p))
        self.items = items

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def priority_map(self) -> dict[bytes, int]:
        return dict(self.items)

    def by_decreasing_priority(self) -> list[tuple[bytes, int]]:
        if len({p for _, p in self.items}) != len(self.items):
            raise ValueError("priorities must be pairwise distinct")
        return sorted(self.items, key=lambda kv: -kv[1])


def build_decreasing_priority(ps) -> NaiveTst:
    """Build the reference trie by inserting in decreasing priority order.

    With pairwise-distinct priorities this order is unique, so the result is
    the canonical shape any priority-respecting tree must match.
    """
    if not isinstance(ps, PrioritizedSet):
        ps = PrioritizedSet(ps)
    t = NaiveTst()
    for key, _ in ps.by_decreasing_priority():
        t.insert(key)
    return t


def shapes_equal(a: str, b: str) -> bool:
    return a == b


def lemma1_predicate(order, x, y) -> bool:
    """Insertion-order side of the BST ancestor equivalence.

    True iff x was inserted before y and before every key strictly between
    min(x, y) and max(x, y) in byte order.  ``order`` lists distinct strings
    in insertion order; x and y must be distinct members.
    """
    keys = [_as_key(s) for s in order]
    pos = {k: i for i, k in enumerate(keys)}
    if len(pos) != len(keys):
        raise ValueError("insertion order contains duplicate strings")
    xk, yk = _as_key(x), _as_key(y)
    if xk == yk:
        raise ValueError("x and y must be distinct")
    if xk not in pos or yk not in pos:
        raise ValueError("x and y must both occur in the insertion order")
    ix = pos[xk]
    if ix > pos[yk]:
        return False
    lo, hi = (xk, yk) if xk < yk else (yk, xk)
    return all(pos[z] > ix for z in keys if lo < z < hi)


__all__ = [
    "NaiveTst",
    "NaiveBst",
    "PrioritizedSet",
    "build_decreasing_priority",
    "shapes_equal",
    "lemma1_predicate",
    "EMPTY_DIGEST",
]
