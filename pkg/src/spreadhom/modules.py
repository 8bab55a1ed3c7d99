"""Persistence modules over a finite poset, and their morphisms.

A module assigns a finite-dimensional F_p vector space to each element and a
matrix to each cover, such that every diamond commutes.  Matrices act on
column vectors: the map along a cover (a, b) has shape (dim_b, dim_a).
"""
from __future__ import annotations

import numpy as np

from .errors import (
    CommutativityError,
    NotComparableError,
    PosetMismatchError,
    ShapeError,
)
from .field import PrimeField
from .poset import Poset, Spread, elements_of, iter_mask, spread_from_convex


class PersistenceModule:
    def __init__(self, poset: Poset, field: PrimeField, dims, maps=None, *, validate=True, spread=None):
        self.poset = poset
        self.field = field
        dims = tuple(int(d) for d in dims)
        if len(dims) != poset.n:
            raise ShapeError(f"{len(dims)} dimensions for {poset.n} elements")
        if any(d < 0 for d in dims):
            raise ShapeError("negative dimension")
        self.dims = dims
        maps = dict(maps or {})
        self.maps = {}
        for a, b in poset.covers:
            m = maps.pop((a, b), None)
            if m is None:
                m = field.zeros(dims[b], dims[a])
            else:
                m = field.arr(m)
                if m.shape != (dims[b], dims[a]):
                    raise ShapeError(
                        f"map {poset.label(a)}->{poset.label(b)} has shape {m.shape}, "
                        f"expected {(dims[b], dims[a])}"
                    )
            self.maps[(a, b)] = m
        if maps:
            raise ShapeError(f"maps given for non-cover pairs: {sorted(maps)}")
        self.spread = spread  # optional provenance tag, ignored by equality
        self._along: dict[tuple[int, int], np.ndarray] = {}
        if validate:
            self._validate_commutativity()

    def _canonical_maps_from(self, a: int) -> dict[int, np.ndarray]:
        """Composites along one chosen cover-path from a to every c >= a."""
        canon = {a: self.field.eye(self.dims[a])}
        up = self.poset.up_mask(a)
        for c in self.poset.topo_order:
            if c == a or not (up >> c & 1):
                continue
            p = next(q for q in self.poset.parents(c) if up >> q & 1)
            canon[c] = self.field.matmul(self.maps[(p, c)], canon[p])
        return canon

    def _validate_commutativity(self):
        # Every cover-path into c agrees with the canonical one; by induction
        # on path length this makes all parallel composites equal.
        for a in range(self.poset.n):
            canon = self._canonical_maps_from(a)
            up = self.poset.up_mask(a)
            for c in canon:
                for p in self.poset.parents(c):
                    if not (up >> p & 1):
                        continue
                    via = self.field.matmul(self.maps[(p, c)], canon[p])
                    if not np.array_equal(via, canon[c]):
                        raise CommutativityError(
                            f"paths {self.poset.label(a)} -> {self.poset.label(c)} "
                            f"disagree (one through {self.poset.label(p)})"
                        )

    # -- queries --------------------------------------------------------------

    def dim(self, a: int) -> int:
        return self.dims[a]

    def dimension_vector(self) -> tuple[int, ...]:
        return self.dims

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims)

    def support_mask(self) -> int:
        m = 0
        for a, d in enumerate(self.dims):
            if d:
                m |= 1 << a
        return m

    def map_along(self, a: int, b: int) -> np.ndarray:
        """The structure map M(a -> b) for any comparable pair a <= b."""
        key = (a, b)
        cached = self._along.get(key)
        if cached is not None:
            return cached
        if not self.poset.leq(a, b):
            raise NotComparableError(
                f"{self.poset.label(a)} <= {self.poset.label(b)} fails"
            )
        if a == b:
            out = self.field.eye(self.dims[a])
        else:
            p = next(q for q in self.poset.parents(b) if self.poset.leq(a, q))
            out = self.field.matmul(self.maps[(p, b)], self.map_along(a, p))
        self._along[key] = out
        return out

    def restrict(self, mask: int):
        """Restriction to an induced subposet; returns (module, SubPoset)."""
        sub = self.poset.subposet(mask)
        dims = tuple(self.dims[sub.to_parent(i)] for i in range(sub.poset.n))
        maps = {}
        for i, j in sub.poset.covers:
            maps[(i, j)] = self.map_along(sub.to_parent(i), sub.to_parent(j))
        m = PersistenceModule(sub.poset, self.field, dims, maps, validate=False)
        return m, sub

    def __eq__(self, other):
        return (
            isinstance(other, PersistenceModule)
            and self.poset == other.poset
            and self.field == other.field
            and self.dims == other.dims
            and all(np.array_equal(self.maps[k], other.maps[k]) for k in self.maps)
        )

    def __repr__(self):
        tag = f" {self.spread.render()}" if self.spread is not None else ""
        return f"PersistenceModule{tag}(dims={self.dims})"


class Morphism:
    """A natural transformation f: M -> N given by one matrix per element."""

    def __init__(self, source: PersistenceModule, target: PersistenceModule, components, *, validate=True):
        if source.poset != target.poset:
            raise PosetMismatchError("morphism endpoints live over different posets")
        if source.field != target.field:
            raise PosetMismatchError("morphism endpoints use different primes")
        self.source = source
        self.target = target
        field = source.field
        comps = []
        for a in range(source.poset.n):
            c = field.arr(components[a])
            if c.shape != (target.dims[a], source.dims[a]):
                raise ShapeError(
                    f"component at {source.poset.label(a)} has shape {c.shape}, "
                    f"expected {(target.dims[a], source.dims[a])}"
                )
            comps.append(c)
        self.components = tuple(comps)
        if validate:
            self._validate_naturality()

    def _validate_naturality(self):
        f = self.source.field
        for a, b in self.source.poset.covers:
            left = f.matmul(self.components[b], self.source.maps[(a, b)])
            right = f.matmul(self.target.maps[(a, b)], self.components[a])
            if not np.array_equal(left, right):
                raise CommutativityError(
                    f"naturality fails on cover "
                    f"{self.source.poset.label(a)}->{self.source.poset.label(b)}"
                )

    def __matmul__(self, other: "Morphism") -> "Morphism":
        if other.target is not self.source and other.target != self.source:
            raise PosetMismatchError("composition endpoints do not match")
        f = self.source.field
        comps = [f.matmul(self.components[a], other.components[a]) for a in range(self.source.poset.n)]
        return Morphism(other.source, self.target, comps, validate=False)

    def vec(self) -> np.ndarray:
        """Flatten to one column: per element, the component in column-major order."""
        parts = [c.T.reshape(-1) for c in self.components]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def is_zero(self) -> bool:
        return all(not c.any() for c in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and all(np.array_equal(a, b) for a, b in zip(self.components, other.components))
        )

    def __repr__(self):
        return f"Morphism({self.source!r} -> {self.target!r})"


def morphism_from_vec(source: PersistenceModule, target: PersistenceModule, v, *, validate=False) -> Morphism:
    """Inverse of Morphism.vec for the same element/column-major layout."""
    v = np.asarray(v, dtype=np.int64)
    comps = []
    off = 0
    for a in range(source.poset.n):
        rows, cols = target.dims[a], source.dims[a]
        block = v[off:off + rows * cols]
        off += rows * cols
        comps.append(block.reshape(cols, rows).T)
    if off != v.shape[0]:
        raise ShapeError(f"vector of length {v.shape[0]}, expected {off}")
    return Morphism(source, target, comps, validate=validate)


# -- constructors --------------------------------------------------------------


def zero_module(poset: Poset, field: PrimeField) -> PersistenceModule:
    return PersistenceModule(poset, field, (0,) * poset.n, {}, validate=False)


def spread_module(spr: Spread, field: PrimeField) -> PersistenceModule:
    """The thin indecomposable with the spread's support: all maps inside are 1."""
    p = spr.poset
    dims = tuple(1 if spr.support >> a & 1 else 0 for a in range(p.n))
    maps = {}
    one = field.arr([[1]])
    for a, b in p.covers:
        if spr.support >> a & 1 and spr.support >> b & 1:
            maps[(a, b)] = one
    return PersistenceModule(p, field, dims, maps, validate=False, spread=spr)


def interval_module(p: Poset, field: PrimeField, a: int, b: int) -> PersistenceModule:
    return spread_module(spread_from_convex(p, p.interval_mask(a, b)), field)


def simple_module(p: Poset, field: PrimeField, a: int) -> PersistenceModule:
    return spread_module(spread_from_convex(p, 1 << a), field)


def projective_module(p: Poset, field: PrimeField, a: int) -> PersistenceModule:
    return spread_module(spread_from_convex(p, p.up_mask(a)), field)


def hook_module(p: Poset, field: PrimeField, a: int, b: int | None = None) -> PersistenceModule:
    """The hook at a with upper cut b: support up(a) minus up(b).

    With b omitted this is the full principal up-set at a (the projective).
    """
    from .errors import HookOrderError

    if b is None:
        return projective_module(p, field, a)
    if not p.lt(a, b):
        raise HookOrderError(f"{p.label(a)} < {p.label(b)} fails")
    support = p.up_mask(a) & ~p.up_mask(b)
    return spread_module(spread_from_convex(p, support), field)


def direct_sum(summands) -> PersistenceModule:
    summands = list(summands)
    if not summands:
        raise ValueError("direct_sum of nothing; use zero_module")
    p = summands[0].poset
    field = summands[0].field
    for m in summands[1:]:
        if m.poset != p or m.field != field:
            raise PosetMismatchError("direct summands must share poset and prime")
    dims = tuple(sum(m.dims[a] for m in summands) for a in range(p.n))
    maps = {}
    for a, b in p.covers:
        blocks = [m.maps[(a, b)] for m in summands]
        out = field.zeros(dims[b], dims[a])
        r = c = 0
        for blk in blocks:
            out[r:r + blk.shape[0], c:c + blk.shape[1]] = blk
            r += blk.shape[0]
            c += blk.shape[1]
        maps[(a, b)] = out
    return PersistenceModule(p, field, dims, maps, validate=False)


def summand_inclusions(total: PersistenceModule, summands) -> list[Morphism]:
    """Inclusions of the given summands into their direct sum (block layout)."""
    out = []
    offsets = [0] * total.poset.n
    for m in summands:
        comps = []
        for a in range(total.poset.n):
            blk = total.field.zeros(total.dims[a], m.dims[a])
            blk[offsets[a]:offsets[a] + m.dims[a], :] = total.field.eye(m.dims[a])
            comps.append(blk)
            offsets[a] += m.dims[a]
        out.append(Morphism(m, total, comps, validate=False))
    return out


def identity_morphism(m: PersistenceModule) -> Morphism:
    return Morphism(m, m, [m.field.eye(d) for d in m.dims], validate=False)


def zero_morphism(source: PersistenceModule, target: PersistenceModule) -> Morphism:
    comps = [source.field.zeros(target.dims[a], source.dims[a]) for a in range(source.poset.n)]
    return Morphism(source, target, comps, validate=False)
