"""Finite posets, convex subsets and spreads.

Elements are dense integer ids 0..n-1 with optional string labels; subsets
are Python-int bitmasks.  A poset is built from an explicit irredundant
cover list and validated on construction (acyclic, no transitive edges).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    AntichainOrderError,
    CapExceededError,
    CycleError,
    DuplicateSpreadError,
    NotAntichainError,
    NotComparableError,
    NotConvexError,
    RedundantCoverError,
)

SPREAD_KINDS = ("connected_all", "single_source", "interval", "hook", "connected_upset")


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def iter_mask(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elements_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_mask(mask))


class Poset:
    """Finite poset given by elements 0..n-1 and an irredundant cover list."""

    def __init__(self, n: int, covers: Iterable[tuple[int, int]], names: Iterable[str] | None = None):
        if n < 0:
            raise ValueError("n must be >= 0")
        self._n = n
        covers = tuple((int(a), int(b)) for a, b in covers)
        names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(names) != n:
            raise ValueError(f"{len(names)} names for {n} elements")
        if len(set(names)) != n:
            raise ValueError("element labels must be distinct")
        self._names = names
        self._name_to_id = {lbl: i for i, lbl in enumerate(names)}

        seen = set()
        children = [[] for _ in range(n)]
        parents = [[] for _ in range(n)]
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover ({a},{b}) out of range")
            if a == b:
                raise CycleError(f"cover ({names[a]},{names[a]}) is a self-loop")
            if (a, b) in seen:
                raise RedundantCoverError(f"cover ({names[a]},{names[b]}) listed twice")
            seen.add((a, b))
            children[a].append(b)
            parents[b].append(a)
        self._covers = tuple(sorted(seen))
        self._children = tuple(tuple(sorted(c)) for c in children)
        self._parents = tuple(tuple(sorted(c)) for c in parents)

        self._topo = self._toposort()
        # reachability masks: up[a] = {x : a <= x}
        up = [0] * n
        for a in reversed(self._topo):
            m = 1 << a
            for c in self._children[a]:
                m |= up[c]
            up[a] = m
        down = [0] * n
        for a in self._topo:
            m = 1 << a
            for c in self._parents[a]:
                m |= down[c]
            down[a] = m
        self._up = tuple(up)
        self._down = tuple(down)

        for a, b in self._covers:
            for c in self._children[a]:
                if c != b and self.leq(c, b):
                    raise RedundantCoverError(
                        f"cover ({names[a]},{names[b]}) is transitive via {names[c]}"
                    )

        self._adj = tuple(
            mask_of(self._children[a]) | mask_of(self._parents[a]) for a in range(n)
        )
        self._mobius_memo: dict[tuple[int, int], int] = {}
        self._hash = hash((n, self._names, self._covers))

    def _toposort(self) -> tuple[int, ...]:
        indeg = [len(self._parents[i]) for i in range(self._n)]
        import heapq

        ready = [i for i in range(self._n) if indeg[i] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            a = heapq.heappop(ready)
            order.append(a)
            for c in self._children[a]:
                indeg[c] -= 1
                if indeg[c] == 0:
                    heapq.heappush(ready, c)
        if len(order) != self._n:
            stuck = [self._names[i] for i in range(self._n) if indeg[i] > 0]
            raise CycleError(f"cover relation has a cycle through {{{', '.join(stuck)}}}")
        return tuple(order)

    # -- basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self._covers

    @property
    def topo_order(self) -> tuple[int, ...]:
        return self._topo

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def element(self, label: str) -> int:
        try:
            return self._name_to_id[label]
        except KeyError:
            raise KeyError(f"unknown element label {label!r}") from None

    def label(self, a: int) -> str:
        return self._names[a]

    def leq(self, a: int, b: int) -> bool:
        return bool(self._up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def up_mask(self, a: int) -> int:
        return self._up[a]

    def down_mask(self, a: int) -> int:
        return self._down[a]

    def children(self, a: int) -> tuple[int, ...]:
        return self._children[a]

    def parents(self, a: int) -> tuple[int, ...]:
        return self._parents[a]

    def interval_mask(self, a: int, b: int) -> int:
        return self._up[a] & self._down[b]

    def comparable_pairs(self) -> tuple[tuple[int, int], ...]:
        """All (a, b) with a <= b, sorted."""
        return tuple(
            (a, b) for a in range(self._n) for b in elements_of(self._up[a])
        )

    def subset_mask(self, ids) -> int:
        """Bitmask from element ids or labels (mixed is fine)."""
        m = mask_of(self.element(x) if isinstance(x, str) else int(x) for x in ids)
        if m & ~self.full_mask:
            raise ValueError("subset contains out-of-range elements")
        return m

    def label_set(self, mask: int) -> tuple[str, ...]:
        return tuple(self._names[i] for i in iter_mask(mask))

    # -- subset predicates ----------------------------------------------------

    def is_antichain(self, mask: int) -> bool:
        for a in iter_mask(mask):
            if (self._up[a] | self._down[a]) & mask & ~(1 << a):
                return False
        return True

    def is_convex(self, mask: int) -> bool:
        return self.convex_closure(mask) == mask

    def convex_closure(self, mask: int) -> int:
        out = 0
        elems = elements_of(mask)
        for x in elems:
            ux = self._up[x]
            for z in elems:
                if ux >> z & 1:
                    out |= ux & self._down[z]
        return out

    def is_connected(self, mask: int) -> bool:
        """Connected in the Hasse diagram restricted to the subset; empty is not."""
        if mask == 0:
            return False
        start = mask & -mask
        comp = self._component_from(start.bit_length() - 1, mask)
        return comp == mask

    def _component_from(self, a: int, mask: int) -> int:
        comp = 1 << a
        frontier = comp
        while frontier:
            nxt = 0
            for x in iter_mask(frontier):
                nxt |= self._adj[x] & mask & ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def connected_components(self, mask: int) -> tuple[int, ...]:
        comps = []
        rest = mask
        while rest:
            a = (rest & -rest).bit_length() - 1
            comp = self._component_from(a, rest)
            comps.append(comp)
            rest &= ~comp
        return tuple(comps)

    def minimal_elements(self, mask: int) -> int:
        out = 0
        for a in iter_mask(mask):
            if not (self._down[a] & mask & ~(1 << a)):
                out |= 1 << a
        return out

    def maximal_elements(self, mask: int) -> int:
        out = 0
        for a in iter_mask(mask):
            if not (self._up[a] & mask & ~(1 << a)):
                out |= 1 << a
        return out

    # -- order notions on antichains -----------------------------------------

    def antichain_leq(self, amask: int, bmask: int) -> bool:
        """A <= B: every a lies below some b and every b lies above some a."""
        for a in iter_mask(amask):
            if not (self._up[a] & bmask):
                return False
        for b in iter_mask(bmask):
            if not (self._down[b] & amask):
                return False
        return True

    # -- structure tests -------------------------------------------------------

    def principal_upsets_totally_ordered(self) -> bool:
        """True when every up-set {x : a <= x} is a chain."""
        for a in range(self._n):
            ups = elements_of(self._up[a])
            for i, x in enumerate(ups):
                for y in ups[i + 1:]:
                    if not (self.leq(x, y) or self.leq(y, x)):
                        return False
        return True

    def hasse_path_order(self) -> tuple[int, ...] | None:
        """Element order along the Hasse graph if it is a simple path, else None."""
        n = self._n
        if n == 0:
            return None
        if n == 1:
            return (0,)
        deg = [bin(self._adj[a]).count("1") for a in range(n)]
        if len(self._covers) != n - 1 or max(deg) > 2:
            return None
        ends = [a for a in range(n) if deg[a] == 1]
        if len(ends) != 2:
            return None
        order = [ends[0]]
        seen = 1 << ends[0]
        while len(order) < n:
            nxt = self._adj[order[-1]] & ~seen
            if nxt == 0 or nxt & (nxt - 1):
                return None
            a = nxt.bit_length() - 1
            order.append(a)
            seen |= nxt
        return tuple(order)

    # -- moebius ---------------------------------------------------------------

    def mobius(self, x: int, y: int) -> int:
        """Moebius function of the poset; requires x <= y."""
        if not self.leq(x, y):
            raise NotComparableError(f"{self._names[x]} <= {self._names[y]} fails")
        memo = self._mobius_memo
        key = (x, y)
        if key in memo:
            return memo[key]
        # fill mu(x, z) for all z in [x, y] in topological order
        interval = self.interval_mask(x, y)
        for z in self._topo:
            if not (interval >> z & 1) or (x, z) in memo:
                continue
            if z == x:
                memo[(x, z)] = 1
                continue
            s = 0
            for w in iter_mask(self.interval_mask(x, z) & ~(1 << z)):
                s += memo[(x, w)]
            memo[(x, z)] = -s
        return memo[key]

    # -- misc ---------------------------------------------------------------

    def subposet(self, mask: int) -> "SubPoset":
        return SubPoset(self, mask)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and other._n == self._n
            and other._names == self._names
            and other._covers == self._covers
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset(n={self._n}, covers={len(self._covers)})"


class SubPoset:
    """An induced subposet, with its own Poset and the element translation."""

    def __init__(self, parent: Poset, mask: int):
        if mask & ~parent.full_mask:
            raise ValueError("subset contains out-of-range elements")
        self.parent = parent
        self.mask = mask
        self.elements = elements_of(mask)  # sub id -> parent id
        index = {e: i for i, e in enumerate(self.elements)}
        covers = []
        for i, a in enumerate(self.elements):
            for b in self.elements:
                if not parent.lt(a, b):
                    continue
                between = parent.interval_mask(a, b) & mask & ~(1 << a) & ~(1 << b)
                if between == 0:
                    covers.append((i, index[b]))
        names = tuple(parent.label(e) for e in self.elements)
        self.poset = Poset(len(self.elements), covers, names)
        self._index = index

    def to_parent(self, i: int) -> int:
        return self.elements[i]

    def from_parent(self, a: int) -> int:
        return self._index[a]


@dataclass(frozen=True)
class Spread:
    """A convex subset recorded as [sources, targets] antichains (bitmasks)."""

    poset: Poset
    support: int
    sources: int
    targets: int

    def __len__(self):
        return bin(self.support).count("1")

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.support)

    def source_elements(self) -> tuple[int, ...]:
        return elements_of(self.sources)

    def target_elements(self) -> tuple[int, ...]:
        return elements_of(self.targets)

    def is_connected(self) -> bool:
        return self.poset.is_connected(self.support)

    def is_interval(self) -> bool:
        return bin(self.sources).count("1") == 1 and bin(self.targets).count("1") == 1

    def render(self) -> str:
        def side(mask: int) -> str:
            labels = [self.poset.label(i) for i in iter_mask(mask)]
            return labels[0] if len(labels) == 1 else "{" + ",".join(labels) + "}"

        return f"[{side(self.sources)},{side(self.targets)}]"

    def __repr__(self):
        return f"Spread{self.render()}"


def spread_from_antichains(p: Poset, sources, targets) -> Spread:
    """Build the spread [A, B] from antichains with A <= B."""
    amask = sources if isinstance(sources, int) else p.subset_mask(sources)
    bmask = targets if isinstance(targets, int) else p.subset_mask(targets)
    if amask == 0 or bmask == 0:
        raise NotAntichainError("source/target antichains must be nonempty")
    if not p.is_antichain(amask):
        raise NotAntichainError(f"sources {p.label_set(amask)} are not an antichain")
    if not p.is_antichain(bmask):
        raise NotAntichainError(f"targets {p.label_set(bmask)} are not an antichain")
    if not p.antichain_leq(amask, bmask):
        raise AntichainOrderError(
            f"antichain order fails: {p.label_set(amask)} <= {p.label_set(bmask)}"
        )
    support = 0
    for a in iter_mask(amask):
        ua = p.up_mask(a)
        for b in iter_mask(bmask & ua):
            support |= ua & p.down_mask(b)
    return Spread(p, support, amask, bmask)


def spread_from_convex(p: Poset, subset) -> Spread:
    """Canonical spread presentation [min S, max S] of a convex subset S."""
    mask = subset if isinstance(subset, int) else p.subset_mask(subset)
    if mask == 0:
        raise NotConvexError("the empty subset is not a spread")
    if not p.is_convex(mask):
        missing = p.label_set(p.convex_closure(mask) & ~mask)
        raise NotConvexError(f"subset is not convex (closure adds {{{', '.join(missing)}}})")
    return Spread(p, mask, p.minimal_elements(mask), p.maximal_elements(mask))


def _antichain_masks(p: Poset, ground: int) -> Iterator[int]:
    """All nonempty antichain masks inside `ground` (elements in id order)."""
    elems = elements_of(ground)

    def rec(i: int, cur: int) -> Iterator[int]:
        if i == len(elems):
            if cur:
                yield cur
            return
        e = elems[i]
        yield from rec(i + 1, cur)
        if not (cur & (p.up_mask(e) | p.down_mask(e))):
            yield from rec(i + 1, cur | (1 << e))

    yield from rec(0, 0)


def enumerate_spreads(p: Poset, kind: str, cap: int = 100_000) -> list[Spread]:
    """Enumerate spreads of the given kind, sorted by support bitmask.

    Kinds: connected_all (all connected convex subsets), single_source,
    interval, hook (including the one-endpoint hooks = principal up-sets),
    connected_upset.
    """
    if kind not in SPREAD_KINDS:
        raise ValueError(f"unknown spread kind {kind!r}; expected one of {SPREAD_KINDS}")
    supports: set[int] = set()

    def add(mask: int):
        supports.add(mask)
        if len(supports) > cap:
            raise CapExceededError(f"more than cap={cap} spreads of kind {kind!r}")

    if kind == "interval":
        for a in range(p.n):
            for b in elements_of(p.up_mask(a)):
                add(p.interval_mask(a, b))
    elif kind == "hook":
        for a in range(p.n):
            add(p.up_mask(a))
            for b in elements_of(p.up_mask(a) & ~(1 << a)):
                add(p.up_mask(a) & ~p.up_mask(b))
    elif kind == "single_source":
        for a in range(p.n):
            for bmask in _antichain_masks(p, p.up_mask(a)):
                support = 0
                for b in iter_mask(bmask):
                    support |= p.up_mask(a) & p.down_mask(b)
                add(support)
    elif kind == "connected_upset":
        for amask in _antichain_masks(p, p.full_mask):
            support = 0
            for a in iter_mask(amask):
                support |= p.up_mask(a)
            if p.is_connected(support):
                add(support)
    else:  # connected_all: grow connected convex sets one Hasse neighbour at a time
        frontier = [1 << a for a in range(p.n)]
        for m in frontier:
            add(m)
        while frontier:
            nxt = []
            for s in frontier:
                cand = 0
                for x in iter_mask(s):
                    cand |= p._adj[x]
                for y in iter_mask(cand & ~s):
                    grown = p.convex_closure(s | (1 << y))
                    if grown not in supports:
                        add(grown)
                        nxt.append(grown)
            frontier = nxt

    return [spread_from_convex(p, m) for m in sorted(supports)]


def containment_poset(spreads: list[Spread]) -> Poset:
    """The poset of a spread collection ordered by support containment."""
    if not spreads:
        return Poset(0, [])
    seen = set()
    for s in spreads:
        if s.support in seen:
            raise DuplicateSpreadError(f"spread {s.render()} appears twice")
        seen.add(s.support)
    n = len(spreads)
    leq = [[spreads[i].support | spreads[j].support == spreads[j].support for j in range(n)] for i in range(n)]
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n)):
                continue
            covers.append((i, j))
    names = tuple(s.render() for s in spreads)
    if len(set(names)) != n:  # renders can collide across posets; fall back to indices
        names = tuple(str(i) for i in range(n))
    return Poset(n, covers, names)
