"""Binary search trees of words and the Sylvester / #-Sylvester congruences.

Trees are nested tuples ``(label, left, right)`` with ``None`` for an empty
subtree, so structural equality is plain tuple equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .combinatorics import check_bound
from .patterns import (
    perm_contains,
    reverse_complement,
    standardize,
    words_with_content,
)

Tree = Optional[tuple]

#: Largest word length for which :func:`sylv_classes` will enumerate.
CLASS_BOUND = 8

_132 = (1, 3, 2)


def _insert(tree: Tree, x: int) -> Tree:
    if tree is None:
        return (x, None, None)
    label, left, right = tree
    if x <= label:
        return (label, _insert(left, x), right)
    return (label, left, _insert(right, x))


def bst_of(w: Sequence[int]) -> Tree:
    """Insert the letters of ``w`` from right to left; ties go left."""
    tree: Tree = None
    for x in reversed(w):
        tree = _insert(tree, x)
    return tree


def sylv_neighbours(w: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Words reachable from ``w`` by one Sylvester move, in either direction.

    ``u a c v b w <-> u c a v b w`` with a <= b < c and b somewhere to the
    right of the swapped pair.
    """
    w = tuple(w)
    n = len(w)
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        if x == y:
            continue
        a, c = min(x, y), max(x, y)
        if any(a <= b < c for b in w[i + 2 :]):
            yield w[:i] + (y, x) + w[i + 2 :]


def sharp_neighbours(w: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Words reachable by one #-Sylvester move: ``u b v a c w <-> u b v c a w``
    with a < b <= c and b somewhere to the left of the swapped pair."""
    w = tuple(w)
    n = len(w)
    for i in range(n - 1):
        x, y = w[i], w[i + 1]
        if x == y:
            continue
        a, c = min(x, y), max(x, y)
        if any(a < b <= c for b in w[:i]):
            yield w[:i] + (y, x) + w[i + 2 :]


def sylv_adjacent(u: Sequence[int], v: Sequence[int]) -> bool:
    return tuple(v) in set(sylv_neighbours(u))


def sharp_adjacent(u: Sequence[int], v: Sequence[int]) -> bool:
    return tuple(v) in set(sharp_neighbours(u))


def sylv_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    if sorted(u) != sorted(v):
        return False
    return bst_of(u) == bst_of(v)


def _rc_pair(u: Sequence[int], v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    top = max(max(u, default=0), max(v, default=0))
    return reverse_complement(u, top), reverse_complement(v, top)


def sharp_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    """#-Sylvester equivalence, decided through reverse-complement."""
    if sorted(u) != sorted(v):
        return False
    ru, rv = _rc_pair(u, v)
    return bst_of(ru) == bst_of(rv)


def closure(
    start: Sequence[int], moves: Callable[[Sequence[int]], Iterator[tuple[int, ...]]]
) -> set[tuple[int, ...]]:
    """Breadth-first closure of ``start`` under a move generator."""
    start = tuple(start)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in moves(w):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def canonical_rep(members: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """The unique member of a Sylvester class whose standardization avoids 132."""
    if not members:
        raise ValueError("class is empty")
    found = [tuple(w) for w in members if not perm_contains(standardize(w), _132)]
    assert len(found) == 1, f"expected one 132-avoiding member, found {found}"
    return found[0]


@dataclass
class ClassTable:
    content: tuple[int, ...]
    classes: list[list[tuple[int, ...]]] = field(default_factory=list)
    canonical: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.classes)

    def to_dict(self, members: bool = False) -> dict:
        out = {
            "content": list(self.content),
            "class_count": str(len(self.classes)),
            "canonical": ["".join(map(str, w)) if max(w, default=0) <= 9 else ",".join(map(str, w))
                          for w in self.canonical],
        }
        if members:
            out["members"] = [[",".join(map(str, w)) for w in cls] for cls in self.classes]
        return out


def _partition_words(content: Sequence[int], key: Callable) -> list[list[tuple[int, ...]]]:
    groups: dict = {}
    for w in words_with_content(content):
        groups.setdefault(key(w), []).append(w)
    return list(groups.values())


def sylv_classes(content: Sequence[int], bound: int = CLASS_BOUND) -> ClassTable:
    """Sylvester classes of all words with the given content.

    Classes are listed in order of their first word (lexicographic) and each
    canonical representative is the member whose standardization avoids 132.
    """
    content = tuple(content)
    check_bound(sum(content), bound, "sylv_classes")
    classes = _partition_words(content, bst_of)
    return ClassTable(content, classes, [canonical_rep(c) for c in classes])


def sharp_classes(content: Sequence[int], bound: int = CLASS_BOUND) -> ClassTable:
    """#-Sylvester classes; representatives are reverse-complements of 132-free words."""
    content = tuple(content)
    check_bound(sum(content), bound, "sharp_classes")
    top = len(content)
    classes = _partition_words(content, lambda w: bst_of(reverse_complement(w, top)))
    reps = [reverse_complement(canonical_rep([reverse_complement(w, top) for w in c]), top)
            for c in classes]
    return ClassTable(content, classes, reps)


def render_tree(tree: Tree, indent: str = "") -> str:
    """Sideways drawing: right subtree above, left subtree below."""
    if tree is None:
        return ""
    label, left, right = tree
    lines = []
    if right is not None:
        lines.append(render_tree(right, indent + "    "))
    lines.append(f"{indent}{label}")
    if left is not None:
        lines.append(render_tree(left, indent + "    "))
    return "\n".join(lines)

