"""Permutations, permutation groups, stabilizer chains, block systems.

Permutations are 0-based image arrays acting on the right: the image of
point ``i`` under ``g`` is ``g.images[i]``, and ``(g * h)`` means "apply
``g`` first, then ``h``".  Groups carry a deterministic stabilizer chain
with base 0, 1, 2, ..., n-1, built once on first use.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import lcm

#: Seed for the randomized search for semiregular elements.
SEMIREGULAR_SEED = 1729
#: Random-word budget before falling back to exhaustive scan.
SEMIREGULAR_WORDS = 10_000
SEMIREGULAR_WORD_LEN = 20
#: Exhaustive fallback is attempted only below this group order.
SEMIREGULAR_EXHAUSTIVE_CAP = 10**6
#: Subgroups up to this order are fully enumerated for coset identification.
COSET_ENUM_CAP = 10**5


class NotTransitive(ValueError):
    """Operation requires a transitive group."""


class SubgroupNotContained(ValueError):
    """Supplied generators do not lie in the ambient group."""


@dataclass(frozen=True)
class Perm:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images are not a bijection on 0..n-1")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(n)))

    @staticmethod
    def from_images(images) -> "Perm":
        return Perm(tuple(int(i) for i in images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def act(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        # apply self first, then other
        o = other.images
        return Perm(tuple(o[i] for i in self.images))

    def inv(self) -> "Perm":
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Perm(tuple(out))

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inv() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, sorted."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_lengths(self) -> list[int]:
        """Lengths of all cycles including fixed points."""
        lens = [len(c) for c in self.cycles()]
        lens += [1] * (self.degree - sum(lens))
        return sorted(lens)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1


def perm_order(g: Perm) -> int:
    """Least k >= 1 with g^k = identity (lcm of cycle lengths)."""
    return g.order()


class _Chain:
    """Stabilizer chain with the full fixed base 0, 1, ..., n-1."""

    def __init__(self, degree: int, gens: list[Perm]):
        self.degree = degree
        self.strong: list[Perm] = []
        # trans[i]: point -> perm t with i^t... the transversal maps base
        # point i to the orbit point under the stabilizer of 0..i-1.
        self.trans: list[dict[int, Perm]] = [
            {i: Perm.identity(degree)} for i in range(degree)
        ]
        for g in gens:
            self._add(g)
        self._close()

    def _level_gens(self, i: int) -> list[Perm]:
        return [g for g in self.strong
                if all(g.images[b] == b for b in range(i))]

    def _rebuild(self, i: int) -> None:
        gens_i = self._level_gens(i)
        t = {i: Perm.identity(self.degree)}
        frontier = [i]
        while frontier:
            x = frontier.pop(0)
            for s in gens_i:
                y = s.images[x]
                if y not in t:
                    t[y] = t[x] * s
                    frontier.append(y)
        self.trans[i] = t

    def strip(self, g: Perm) -> tuple[Perm, int]:
        h = g
        for i in range(self.degree):
            x = h.images[i]
            if x == i:
                continue
            if x not in self.trans[i]:
                return h, i
            h = h * self.trans[i][x].inv()
        return h, self.degree

    def _add(self, g: Perm) -> bool:
        h, j = self.strip(g)
        if h.is_identity():
            return False
        self.strong.append(h)
        for i in range(j + 1):
            self._rebuild(i)
        return True

    def _close(self) -> None:
        # process Schreier generators until a clean pass
        changed = True
        while changed:
            changed = False
            for i in range(self.degree):
                t = self.trans[i]
                if len(t) == 1 and not self._level_gens(i):
                    continue
                gens_i = self._level_gens(i)
                for x in sorted(t):
                    for s in gens_i:
                        y = s.images[x]
                        schreier = t[x] * s * self.trans[i][y].inv()
                        if self._add(schreier):
                            changed = True

    def order(self) -> int:
        n = 1
        for t in self.trans:
            n *= len(t)
        return n

    def contains(self, g: Perm) -> bool:
        h, _ = self.strip(g)
        return h.is_identity()

    def elements(self):
        """Iterate all group elements (product of transversals)."""
        levels = [sorted(t.items()) for t in self.trans if len(t) > 1]

        def rec(i: int):
            if i < 0:
                yield Perm.identity(self.degree)
                return
            for h in rec(i - 1):
                for _, t in levels[i]:
                    # deeper-level factors apply first (inverse of strip)
                    yield t * h

        yield from rec(len(levels) - 1)

    def stabilizer_gens(self, upto: int) -> list[Perm]:
        """Strong generators fixing every point below ``upto`` pointwise."""
        return self._level_gens(upto)


class PermGroup:
    """Finite permutation group given by generators.

    The stabilizer chain is built lazily, exactly once, and never
    mutated afterwards; all queries are read-only.
    """

    def __init__(self, degree: int, generators):
        gens = [g if isinstance(g, Perm) else Perm.from_images(g)
                for g in generators]
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self._chain: _Chain | None = None

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            self._chain = _Chain(self.degree, list(self.generators))
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, g: Perm) -> bool:
        return g.degree == self.degree and self.chain.contains(g)

    def elements(self):
        yield from self.chain.elements()

    def orbit(self, v: int) -> list[int]:
        seen = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop(0)
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        out = []
        done: set[int] = set()
        for v in range(self.degree):
            if v in done:
                continue
            o = self.orbit(v)
            done.update(o)
            out.append(o)
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def transversal_from(self, v: int) -> dict[int, Perm]:
        """BFS transversal: point -> g with v^g = point, fixed gen order."""
        t = {v: Perm.identity(self.degree)}
        frontier = [v]
        while frontier:
            x = frontier.pop(0)
            for g in self.generators:
                y = g.images[x]
                if y not in t:
                    t[y] = t[x] * g
                    frontier.append(y)
        return t

    def random_element(self, rng: random.Random) -> Perm:
        pool = list(self.generators) + [g.inv() for g in self.generators]
        if not pool:
            return Perm.identity(self.degree)
        g = Perm.identity(self.degree)
        for _ in range(rng.randint(1, SEMIREGULAR_WORD_LEN)):
            g = g * rng.choice(pool)
        return g


def orbits(G: PermGroup) -> list[list[int]]:
    """Orbit partition of the group's natural action."""
    return G.orbits()


def group_order(G: PermGroup) -> int:
    """Exact group order via the stabilizer chain."""
    return G.order()


def point_stabilizer(G: PermGroup, v: int) -> PermGroup:
    """Stabilizer G_v, computed from a chain rebased to start at v."""
    relabel = list(range(G.degree))
    relabel[0], relabel[v] = v, 0
    swap = Perm(tuple(relabel))
    conj = [swap * g * swap for g in G.generators]
    chain = _Chain(G.degree, conj)
    stab = [swap * h * swap for h in chain.stabilizer_gens(1)]
    return PermGroup(G.degree, stab)


def minimal_block(G: PermGroup, a: int, b: int) -> set[int]:
    """Smallest block of G containing {a, b} (union-find refinement)."""
    if not G.is_transitive():
        raise NotTransitive("minimal_block requires a transitive group")
    if a == b:
        raise ValueError("need two distinct points")
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> int | None:
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return ry  # the absorbed representative

    queue = [union(a, b)]
    while queue:
        q = queue.pop()
        r = find(q)
        for g in G.generators:
            absorbed = union(g.images[q], g.images[r])
            if absorbed is not None:
                queue.append(absorbed)
    root = find(a)
    return {x for x in range(n) if find(x) == root}


@dataclass(frozen=True)
class BlockSystem:
    """G-invariant partition into cells of equal size."""

    cells: tuple[tuple[int, ...], ...]
    cell_size: int

    def cell_of(self, v: int) -> int:
        for i, c in enumerate(self.cells):
            if v in c:
                return i
        raise KeyError(v)


def _system_from_block(G: PermGroup, block: frozenset[int]) -> BlockSystem:
    cells = {block}
    frontier = [block]
    while frontier:
        c = frontier.pop(0)
        for g in G.generators:
            img = frozenset(g.images[x] for x in c)
            if img not in cells:
                cells.add(img)
                frontier.append(img)
    sorted_cells = tuple(sorted(tuple(sorted(c)) for c in cells))
    covered = sorted(x for c in sorted_cells for x in c)
    if covered != list(range(G.degree)):
        raise AssertionError("block orbit does not partition the points")
    return BlockSystem(sorted_cells, len(block))


def block_systems(G: PermGroup) -> list[BlockSystem]:
    """All minimal nontrivial block systems of a transitive group."""
    if not G.is_transitive():
        raise NotTransitive("block_systems requires a transitive group")
    n = G.degree
    blocks: list[frozenset[int]] = []
    for b in range(1, n):
        blk = frozenset(minimal_block(G, 0, b))
        if len(blk) < n and blk not in blocks:
            blocks.append(blk)
    return [_system_from_block(G, blk) for blk in blocks]


def _semiregular_from(g: Perm, p: int) -> Perm | None:
    o = g.order()
    if o % p:
        return None
    h = g ** (o // p)
    if all(len(c) == p for c in h.cycles()) and not any(
        h.images[i] == i for i in range(h.degree)
    ):
        return h
    return None


def find_semiregular(G: PermGroup, p: int,
                     seed: int = SEMIREGULAR_SEED) -> Perm | None:
    """Search for an element with n/p cycles of length exactly p.

    Seeded random words first, then an exhaustive scan for small groups.
    ``None`` is certain when p does not divide the group order, and
    otherwise means the search budget was exhausted.
    """
    if G.degree % p:
        return None
    if G.order() % p:
        return None
    rng = random.Random(seed)
    for _ in range(SEMIREGULAR_WORDS):
        h = _semiregular_from(G.random_element(rng), p)
        if h is not None:
            return h
    if G.order() <= SEMIREGULAR_EXHAUSTIVE_CAP:
        for g in G.elements():
            h = _semiregular_from(g, p)
            if h is not None:
                return h
    return None


class CosetAction:
    """Action of a group on the right cosets of a subgroup."""

    def __init__(self, group: PermGroup, reps: list[Perm],
                 push, coset_index):
        self.group = group          # degree [G:H] permutation group
        self.reps = reps            # reps[i] represents coset H*reps[i]
        self.push = push            # Perm on n points -> Perm on cosets
        self.coset_index = coset_index  # Perm -> index of its coset

    @property
    def degree(self) -> int:
        return self.group.degree


def _min_coset_rep(Hchain: _Chain, g: Perm) -> tuple[int, ...]:
    """Lexicographically least image tuple over the coset H*g.

    Greedy descent over the full-base chain of H; exact because the
    base is 0, 1, ..., n-1 in order.
    """
    cur = g
    for i in range(Hchain.degree):
        t = Hchain.trans[i]
        if len(t) == 1:
            continue
        x = min(t, key=lambda pt: cur.images[pt])
        cur = t[x] * cur
    return cur.images


def coset_action(G: PermGroup, Hgens) -> CosetAction:
    """Transitive action of G's generators on right cosets of H = <Hgens>."""
    Hgens = [h if isinstance(h, Perm) else Perm.from_images(h) for h in Hgens]
    for h in Hgens:
        if not G.contains(h):
            raise SubgroupNotContained("subgroup generator outside the group")
    H = PermGroup(G.degree, Hgens)
    h_order = H.order()

    if h_order <= COSET_ENUM_CAP:
        helems = sorted(H.elements(), key=lambda e: e.images)

        def key(g: Perm) -> tuple[int, ...]:
            return min((h * g).images for h in helems)
    else:
        def key(g: Perm) -> tuple[int, ...]:
            return _min_coset_rep(H.chain, g)

    reps: list[Perm] = [Perm.identity(G.degree)]
    index: dict[tuple[int, ...], int] = {key(reps[0]): 0}
    frontier = [0]
    while frontier:
        i = frontier.pop(0)
        for g in G.generators:
            cand = reps[i] * g
            k = key(cand)
            if k not in index:
                index[k] = len(reps)
                reps.append(cand)
                frontier.append(index[k])

    m = len(reps)

    def push(g: Perm) -> Perm:
        return Perm(tuple(index[key(reps[i] * g)] for i in range(m)))

    def coset_index(g: Perm) -> int:
        return index[key(g)]

    images = [push(g) for g in G.generators]
    return CosetAction(PermGroup(m, images), reps, push, coset_index)
