"""Face numbering of a dodecahedral cell and its rotation group.

Faces are numbered 0 (bottom), 1..5 (lower ring), 6..10 (upper ring) and
11 (top).  Lower-ring face ``i`` touches face 0, its two ring neighbours and
the upper-ring faces ``5 + i`` and ``(i % 5) + 6``; every upper-ring face
touches face 11.

A rotation is stored as a tuple ``rho`` of 12 face indices: the symbol seen
through face ``i`` is moved to face ``rho[i]``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

NFACES = 12

Perm = tuple[int, ...]


class GroupConstructionError(RuntimeError):
    pass


def _build_adjacency() -> tuple[frozenset[int], ...]:
    nbrs: list[set[int]] = [set() for _ in range(NFACES)]

    def join(a: int, b: int) -> None:
        nbrs[a].add(b)
        nbrs[b].add(a)

    for i in range(1, 6):
        join(0, i)
        join(i, i % 5 + 1)
        join(i, 5 + i)
        join(i, i % 5 + 6)
        join(5 + i, 11)
        join(5 + i, i % 5 + 6)
    return tuple(frozenset(s) for s in nbrs)


ADJACENCY = _build_adjacency()


def face_adjacency() -> tuple[frozenset[int], ...]:
    """Return the neighbour sets of the 12 faces, indexed by face."""
    return ADJACENCY


def adjacent(a: int, b: int) -> bool:
    return b in ADJACENCY[a]


def degree(f: int) -> int:
    return len(ADJACENCY[f])


def _triangles() -> list[tuple[int, int, int]]:
    # each vertex of the dodecahedron is a triangle of mutually adjacent faces
    tris = []
    for a in range(NFACES):
        for b in ADJACENCY[a]:
            for c in ADJACENCY[a] & ADJACENCY[b]:
                if a < b < c:
                    tris.append((a, b, c))
    return tris


VERTICES = tuple(_triangles())


def _orient() -> frozenset[tuple[int, int, int]]:
    """Positively oriented corner triples, seeded by (0, 1, 2).

    Two corners sharing an edge traverse it in opposite directions, which
    fixes the orientation of every corner from a single seed.
    """
    positive: set[tuple[int, int, int]] = set()

    def add(t: tuple[int, int, int]) -> None:
        a, b, c = t
        positive.update({(a, b, c), (b, c, a), (c, a, b)})

    add((0, 1, 2))
    todo = deque([(0, 1, 2)])
    while todo:
        a, b, c = todo.popleft()
        for x, y in ((a, b), (b, c), (c, a)):
            # the other corner on edge x-y, traversed as y -> x
            (z,) = (ADJACENCY[x] & ADJACENCY[y]) - {a, b, c}
            t = (y, x, z)
            if t not in positive:
                add(t)
                todo.append(t)
    return frozenset(positive)


POSITIVE_CORNERS = _orient()


def is_adjacency_preserving(rho: Sequence[int]) -> bool:
    return all(adjacent(rho[a], rho[b]) for a in range(NFACES) for b in ADJACENCY[a])


def is_orientation_preserving(rho: Sequence[int]) -> bool:
    return all(
        ((rho[a], rho[b], rho[c]) in POSITIVE_CORNERS) == ((a, b, c) in POSITIVE_CORNERS)
        for a, b, c in VERTICES
    )


def extend_corner_map(src: tuple[int, int, int], dst: tuple[int, int, int]) -> Perm:
    """The unique adjacency automorphism sending corner ``src`` to ``dst``.

    Faces are placed one at a time: a face sitting on an already mapped edge
    next to an already mapped third face has a forced image.
    """
    for t in (src, dst):
        if tuple(sorted(t)) not in VERTICES:
            raise GroupConstructionError(f"{t} is not a corner of the cell")
    image = dict(zip(src, dst))
    changed = True
    while changed and len(image) < NFACES:
        changed = False
        for x in list(image):
            for y in ADJACENCY[x]:
                if y not in image:
                    continue
                known = ADJACENCY[x] & ADJACENCY[y]
                mapped = [z for z in known if z in image]
                free = [z for z in known if z not in image]
                if len(mapped) == 1 and free:
                    targets = (ADJACENCY[image[x]] & ADJACENCY[image[y]]) - {image[mapped[0]]}
                    if len(targets) != 1 or (t := next(iter(targets))) in image.values():
                        raise GroupConstructionError(f"corner map {src}->{dst} is inconsistent")
                    image[free[0]] = t
                    changed = True
    if len(image) != NFACES:
        raise GroupConstructionError(f"corner map {src}->{dst} did not extend")
    rho = tuple(image[i] for i in range(NFACES))
    if not is_adjacency_preserving(rho):
        raise GroupConstructionError(f"corner map {src}->{dst} is not an automorphism")
    return rho


IDENTITY: Perm = tuple(range(NFACES))


def compose(outer: Sequence[int], inner: Sequence[int]) -> Perm:
    """``outer o inner``: apply ``inner`` first."""
    return tuple(outer[inner[i]] for i in range(NFACES))


def inverse(rho: Sequence[int]) -> Perm:
    inv = [0] * NFACES
    for i, j in enumerate(rho):
        inv[j] = i
    return tuple(inv)


# a fifth of a turn about the 0-11 axis, and a third of a turn about corner (0, 1, 2)
TURN_AXIS = extend_corner_map((0, 1, 2), (0, 2, 3))
TURN_CORNER = extend_corner_map((0, 1, 2), (1, 2, 0))


def close_group(generators: Iterable[Sequence[int]]) -> list[Perm]:
    gens = [tuple(g) for g in generators]
    seen = {IDENTITY}
    order = [IDENTITY]
    todo = deque([IDENTITY])
    while todo:
        g = todo.popleft()
        for h in gens:
            k = compose(h, g)
            if k not in seen:
                seen.add(k)
                order.append(k)
                todo.append(k)
    return order


def rotation_group(generators: Iterable[Sequence[int]]) -> tuple[Perm, ...]:
    group = close_group(generators)
    if len(group) != 60:
        raise GroupConstructionError(f"rotation closure has {len(group)} elements, expected 60")
    for rho in group:
        if not (is_adjacency_preserving(rho) and is_orientation_preserving(rho)):
            raise GroupConstructionError(f"{rho} is not a rotation")
    return tuple(group)


@lru_cache(maxsize=None)
def enumerate_rotations() -> tuple[Perm, ...]:
    """All 60 rotations of the cell, identity first."""
    return rotation_group([TURN_AXIS, TURN_CORNER])


def apply(rho: Sequence[int], word: Sequence) -> tuple:
    out = [None] * NFACES
    for i, s in enumerate(word):
        out[rho[i]] = s
    return tuple(out)


def _mask(word: Sequence) -> int:
    # face 0 is the most significant bit so integer order is lexicographic order
    m = 0
    for s in word:
        m = (m << 1) | (1 if s else 0)
    return m


@lru_cache(maxsize=None)
def _mask_tables() -> tuple[tuple[int, ...], ...]:
    # for each rotation, bit of (dest face) contributed by each source face
    return tuple(tuple(1 << (NFACES - 1 - rho[i]) for i in range(NFACES)) for rho in enumerate_rotations())


@lru_cache(maxsize=1 << 13)
def canonical_mask(mask: int) -> int:
    best = mask
    bits = [(mask >> (NFACES - 1 - i)) & 1 for i in range(NFACES)]
    for table in _mask_tables():
        m = 0
        for i in range(NFACES):
            if bits[i]:
                m |= table[i]
        if m < best:
            best = m
    return best


def canonical(word: Sequence) -> tuple:
    """Lexicographically least rotated image of a 12-symbol word.

    Symbols are compared by truth value, so with ``W == 0`` and ``B == 1``
    white sorts before black.  Symbols are returned as ``type(word[0])``
    where that type can be built from an int.
    """
    m = canonical_mask(_mask(word))
    kind = type(word[0]) if len(word) else int
    return tuple(kind((m >> (NFACES - 1 - i)) & 1) for i in range(NFACES))
