"""Randomized ternary search trie.

A ternary search trie whose internal binary search trees are kept balanced
the way a treap balances itself: every stored string carries an integer
priority drawn uniformly from [1, r], every node carries the maximum
priority among the strings passing through it, and left/right links obey
the max-heap property on node priorities.  The resulting shape depends only
on the stored (string, priority) pairs, not on the order of inserts and
deletes, which is what the oracle test kit exploits.

Keys are byte strings; ``str`` arguments are encoded as UTF-8 (with
surrogateescape, so undecodable command-line bytes round-trip).  All
comparisons use unsigned byte order.  The empty string cannot be stored.

Mutating operations (``insert``, ``delete``) require exclusive access to the
tree; read operations may run concurrently with each other.  No locking is
done here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

DEFAULT_R = 2**31 - 1

# branch tags used in the explicit descent stacks
_LEFT, _MID, _RIGHT = 0, 1, 2

EMPTY_DIGEST = "-"


class Node:
    """One trie node.

    ``char`` is the byte label compared during search.  ``str_prio`` is the
    priority of the string terminating at this node, 0 if none does.
    ``prio`` is max(str_prio, mid.prio): the highest priority among strings
    whose path runs through this node.  ``left``/``mid``/``right`` are child
    links; absent children are the ``NIL`` sentinel, never ``None``.
    """

    __slots__ = ("char", "prio", "str_prio", "left", "mid", "right")

    def __init__(self, char: int):
        self.char = char
        self.prio = 0
        self.str_prio = 0
        self.left = NIL
        self.mid = NIL
        self.right = NIL

    def __repr__(self):
        if self is NIL:
            return "NIL"
        return f"Node({self.char:#04x}, prio={self.prio}, str_prio={self.str_prio})"


# Sentinel standing in for absent children.  Priority 0, children point back
# at itself so child-priority reads need no branching.  Never rotated, never
# enumerated, never counted.
NIL: Node = Node.__new__(Node)
NIL.char = -1
NIL.prio = 0
NIL.str_prio = 0
NIL.left = NIL
NIL.mid = NIL
NIL.right = NIL


class PathStats(NamedTuple):
    """Accounting for one search walk.

    ``chars_consumed`` counts character matches (mid-steps plus the terminal
    match), ``sidesteps`` counts left/right link traversals, ``depth`` counts
    every node visited.  depth == chars_consumed + sidesteps on a hit.
    """

    found: bool
    chars_consumed: int
    sidesteps: int
    depth: int


@dataclass(frozen=True)
class Violation:
    """One invariant failure found by ``RTrie.check_invariants``.

    ``kind`` is a stable tag (heap, prio-consistency, str-prio-range,
    dead-node, bst-order, count); ``path`` is the L/M/R link string from the
    root to the offending node.
    """

    kind: str
    path: str
    detail: str

    def __str__(self):
        return f"{self.kind} at [{self.path or 'root'}]: {self.detail}"


def _as_key(s) -> bytes:
    if isinstance(s, str):
        s = s.encode("utf-8", "surrogateescape")
    elif isinstance(s, bytearray):
        s = bytes(s)
    elif not isinstance(s, bytes):
        raise TypeError(f"key must be str or bytes, not {type(s).__name__}")
    if not s:
        raise ValueError("the empty string cannot be stored or searched for")
    return s


class RandomPriorities:
    """Uniform integer priorities on [1, r] from a seeded PRNG."""

    def __init__(self, r: int, seed=None):
        self.r = r
        self._rng = random.Random(seed)

    def draw(self, key: bytes) -> int:
        return self._rng.randint(1, self.r)


class FixedPriorities:
    """Injected per-string priorities.

    Used by shape tests that need full control: a string re-inserted after a
    delete draws the same priority again, so the final shape is a function of
    the surviving (string, priority) pairs alone.
    """

    def __init__(self, priorities):
        self._map = {_as_key(k): int(v) for k, v in dict(priorities).items()}

    def draw(self, key: bytes) -> int:
        try:
            return self._map[key]
        except KeyError:
            raise ValueError(f"no injected priority for {key!r}") from None


def rotate_with_left(x: Node) -> Node:
    """Rotate x down to the right; its left child becomes the subtree root.

    Touches exactly three links, nothing else: search order and every node's
    char/prio/str_prio/mid are preserved.
    """
    y = x.left
    assert y is not NIL, "rotate_with_left: no left child"
    x.left = y.right
    y.right = x
    return y


def rotate_with_right(x: Node) -> Node:
    """Mirror image of ``rotate_with_left``."""
    y = x.right
    assert y is not NIL, "rotate_with_right: no right child"
    x.right = y.left
    y.left = x
    return y


def heapify_or_delete(x: Node) -> Node:
    """Sink x below any strictly higher-priority left/right child, then
    replace it by NIL if its priority reached 0.

    Only x itself may violate the heap property on entry; its subtrees must
    be sound.  Ties between children go to the right child.  Returns the new
    subtree root (NIL when x was the whole subtree and died).
    """
    return _sink(x)[0]


def _sink(x: Node) -> tuple[Node, int]:
    # Returns (new subtree root, rotations performed).
    if x is NIL:
        return NIL, 0
    top = x
    parent = None
    on_left = False
    rotations = 0
    while True:
        left, right = x.left, x.right
        p = x.prio
        if p < left.prio or p < right.prio:
            if left.prio > right.prio:
                y = rotate_with_left(x)
                child_on_left = False  # x ended up as y.right
            else:
                y = rotate_with_right(x)
                child_on_left = True
            rotations += 1
            if parent is None:
                top = y
            elif on_left:
                parent.left = y
            else:
                parent.right = y
            parent, on_left = y, child_on_left
        else:
            keep = NIL if p == 0 else x
            if parent is None:
                return keep, rotations
            if on_left:
                parent.left = keep
            else:
                parent.right = keep
            return top, rotations


class RTrie:
    """Treap-balanced ternary search trie over byte strings.

    ``r`` is the priority ceiling (priorities are uniform on [1, r]); ``seed``
    fixes the priority stream.  ``priorities`` may inject any object with a
    ``draw(key) -> int`` method in place of the seeded PRNG; ``FixedPriorities``
    is the deterministic implementation the tests use.

    ``rotations`` counts every rotation performed since construction, for
    cost accounting.
    """

    def __init__(self, r: int = DEFAULT_R, seed: int | None = None, priorities=None):
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"priority ceiling r must be an integer >= 1, got {r!r}")
        self.r = r
        self.root: Node = NIL
        self.count = 0
        self.rotations = 0
        self._priorities = priorities if priorities is not None else RandomPriorities(r, seed)

    def __len__(self) -> int:
        return self.count

    def __repr__(self):
        return f"<RTrie n={self.count} r={self.r}>"

    def insert(self, s) -> bool:
        """Store s.  Returns True if it was new, False if already present.

        A duplicate insert is a strict no-op: no priority is drawn, nothing
        is rotated, the tree is left bit-for-bit unchanged.
        """
        key = _as_key(s)
        last = len(key) - 1
        path: list[tuple[Node, int]] = []
        x = self.root
        parent: Node | None = None
        link = _MID
        i = 0
        # plain ternary-search-trie descent, creating missing nodes with
        # priority 0; they are repaired on the way back up
        while True:
            if x is NIL:
                x = Node(key[i])
                if parent is None:
                    self.root = x
                elif link == _LEFT:
                    parent.left = x
                elif link == _RIGHT:
                    parent.right = x
                else:
                    parent.mid = x
            c = key[i]
            if c < x.char:
                path.append((x, _LEFT))
                parent, link, x = x, _LEFT, x.left
            elif c > x.char:
                path.append((x, _RIGHT))
                parent, link, x = x, _RIGHT, x.right
            elif i < last:
                path.append((x, _MID))
                parent, link, x = x, _MID, x.mid
                i += 1
            else:
                break
        if x.str_prio != 0:
            return False
        p = self._priorities.draw(key)
        if not 1 <= p <= self.r:
            raise ValueError(f"priority source produced {p}, outside [1, {self.r}]")
        x.str_prio = p
        x.prio = p if p > x.mid.prio else x.mid.prio
        # unwind: refresh prefix-path priorities, bubble up through left/right
        # parents while the heap property is violated
        child = x
        for j in range(len(path) - 1, -1, -1):
            node, branch = path[j]
            if branch == _LEFT:
                node.left = child
                if child.prio > node.prio:
                    self.rotations += 1
                    node = rotate_with_left(node)
            elif branch == _RIGHT:
                node.right = child
                if child.prio > node.prio:
                    self.rotations += 1
                    node = rotate_with_right(node)
            else:
                node.mid = child
            sp, mp = node.str_prio, node.mid.prio
            node.prio = sp if sp > mp else mp  # no-op after left/right steps
            child = node
        self.root = child
        self.count += 1
        return True

    def delete(self, s) -> bool:
        """Remove s.  Returns True if it was present, False otherwise.

        Deleting an absent string is a strict no-op, even when a proper
        prefix path of s exists in the tree.
        """
        key = _as_key(s)
        last = len(key) - 1
        path: list[tuple[Node, int]] = []
        x = self.root
        i = 0
        while x is not NIL:
            c = key[i]
            if c < x.char:
                path.append((x, _LEFT))
                x = x.left
            elif c > x.char:
                path.append((x, _RIGHT))
                x = x.right
            elif i < last:
                path.append((x, _MID))
                x = x.mid
                i += 1
            else:
                break
        if x is NIL or x.str_prio == 0:
            return False
        x.str_prio = 0
        x.prio = x.mid.prio
        child, n = _sink(x)
        self.rotations += n
        # prefix-path nodes (mid links) get their priority refreshed and are
        # sunk if now dominated; left/right ancestors are only relinked
        for j in range(len(path) - 1, -1, -1):
            node, branch = path[j]
            if branch == _LEFT:
                node.left = child
            elif branch == _RIGHT:
                node.right = child
            else:
                node.mid = child
                sp, mp = node.str_prio, node.mid.prio
                node.prio = sp if sp > mp else mp
                node, n = _sink(node)
                self.rotations += n
            child = node
        self.root = child
        self.count -= 1
        return True

    def contains(self, s) -> bool:
        """Membership test.  Read-only."""
        key = _as_key(s)
        x = self.root
        i = 0
        last = len(key) - 1
        while x is not NIL:
            c = key[i]
            if c < x.char:
                x = x.left
            elif c > x.char:
                x = x.right
            elif i < last:
                x = x.mid
                i += 1
            else:
                return x.str_prio > 0
        return False

    __contains__ = contains

    def search_path(self, s) -> PathStats:
        """Replay the exact ``contains`` walk, counting steps.  Read-only."""
        key = _as_key(s)
        x = self.root
        i = 0
        n = len(key)
        sidesteps = 0
        depth = 0
        while x is not NIL:
            depth += 1
            c = key[i]
            if c < x.char:
                x = x.left
                sidesteps += 1
            elif c > x.char:
                x = x.right
                sidesteps += 1
            else:
                i += 1
                if i == n:
                    return PathStats(x.str_prio > 0, i, sidesteps, depth)
                x = x.mid
        return PathStats(False, i, sidesteps, depth)

    def prefix_iter(self, prefix=b"") -> Iterator[bytes]:
        """Yield every stored string starting with ``prefix``, in byte order.

        The empty prefix enumerates the whole set.  Yields ``bytes``.
        """
        if isinstance(prefix, str):
            prefix = prefix.encode("utf-8", "surrogateescape")
        else:
            prefix = bytes(prefix)
        start = self.root
        if prefix:
            x = self.root
            i = 0
            last = len(prefix) - 1
            while x is not NIL:
                c = prefix[i]
                if c < x.char:
                    x = x.left
                elif c > x.char:
                    x = x.right
                elif i < last:
                    x = x.mid
                    i += 1
                else:
                    break
            if x is NIL:
                return
            if x.str_prio > 0:
                yield prefix
            start = x.mid
        # in-order over left/right links with mid in the middle gives
        # lexicographic byte order (a prefix sorts before its extensions)
        explore, emit = 0, 1
        stack = [(explore, start, prefix)]
        while stack:
            kind, x, pref = stack.pop()
            if kind == explore:
                if x is NIL:
                    continue
                stack.append((explore, x.right, pref))
                stack.append((emit, x, pref))
                stack.append((explore, x.left, pref))
            else:
                full = pref + bytes((x.char,))
                if x.str_prio > 0:
                    yield full
                stack.append((explore, x.mid, full))

    def shape_digest(self) -> str:
        """Canonical serialization of the tree's shape.

        Covers (char, terminal flag, left/mid/right structure) and nothing
        else; priorities are deliberately excluded so digests are comparable
        with structures that do not carry them.  Two trees have equal digests
        iff they are isomorphic as labeled ternary trees with identical
        terminal markings.  The empty tree digests to ``"-"``.
        """
        return shape_digest_of(self.root, NIL, _node_is_terminal)

    def check_invariants(self) -> list[Violation]:
        """Validate every structural invariant; returns found violations.

        Checks the heap property on left/right links, prio == max(str_prio,
        mid.prio), str_prio in range, liveness (no reachable priority-0
        node), strict BST char order within each left/right component, and
        the stored-string count.  Never mutates.
        """
        violations = self._scan(track_paths=False)
        if violations:
            violations = self._scan(track_paths=True)
        return violations

    def _scan(self, track_paths: bool) -> list[Violation]:
        violations = []
        nil = NIL
        r = self.r

        def report(kind, trail, detail):
            violations.append(Violation(kind, _trail_str(trail), detail))

        if self.root is not nil:
            stack = [(self.root, 0, 0x100, None)]
            terminals = 0
            while stack:
                x, lo, hi, trail = stack.pop()
                c = x.char
                p = x.prio
                sp = x.str_prio
                left, mid, right = x.left, x.mid, x.right
                if sp:
                    terminals += 1
                    if not 1 <= sp <= r:
                        report("str-prio-range", trail,
                               f"str_prio {sp} outside [1, {r}]")
                mp = mid.prio
                if p != (sp if sp > mp else mp):
                    report("prio-consistency", trail,
                           f"prio {p} != max(str_prio {sp}, mid.prio {mp})")
                if p < 1:
                    report("dead-node", trail, f"reachable node with prio {p}")
                if p < left.prio or p < right.prio:
                    report("heap", trail,
                           f"prio {p} below child priority "
                           f"{max(left.prio, right.prio)}")
                if not lo <= c < hi:
                    report("bst-order", trail,
                           f"char {c:#04x} outside sibling range [{lo:#04x}, {hi:#04x})")
                if left is not nil:
                    stack.append((left, lo, c, (trail, "L") if track_paths else None))
                if mid is not nil:
                    stack.append((mid, 0, 0x100, (trail, "M") if track_paths else None))
                if right is not nil:
                    stack.append((right, c + 1, hi, (trail, "R") if track_paths else None))
        else:
            terminals = 0
        if terminals != self.count:
            report("count", None,
                   f"stored count {self.count} != {terminals} terminal nodes")
        return violations


def _node_is_terminal(n: Node) -> bool:
    return n.str_prio > 0


def _trail_str(trail) -> str:
    labels = []
    while trail is not None:
        trail, label = trail
        labels.append(label)
    return "".join(reversed(labels))


_CLOSE = object()


def shape_digest_of(root, nil, is_terminal) -> str:
    """Shared digest serializer (the oracle structures use it too).

    Preorder, explicit nil markers, fixed-width hex chars: ``(63!...)`` for a
    terminal 'c' node, ``-`` for nil.  Injective on shapes by construction.
    """
    if root is nil:
        return EMPTY_DIGEST
    out = []
    stack = [root]
    while stack:
        x = stack.pop()
        if x is _CLOSE:
            out.append(")")
        elif x is nil:
            out.append("-")
        else:
            out.append("(%02x%s" % (x.char, "!" if is_terminal(x) else ""))
            stack.append(_CLOSE)
            stack.append(x.right)
            stack.append(x.mid)
            stack.append(x.left)
    return "".join(out)
