"""Random persistence modules for property tests and surveys.

Modules are produced as base-changed sums of spread modules, or as kernels of
random morphisms between such sums, so every draw is a genuine module (the
commutativity validator stays on while we build them).
"""
from __future__ import annotations

import random

import numpy as np

from .field import PrimeField
from .hom import hom_basis, kernel_module
from .modules import PersistenceModule, direct_sum, spread_module
from .poset import Poset, enumerate_spreads


def random_invertible(field: PrimeField, rng: random.Random, d: int) -> np.ndarray:
    if d == 0:
        return field.zeros(0, 0)
    while True:
        m = field.arr([[rng.randrange(field.p) for _ in range(d)] for _ in range(d)])
        if field.rank(m) == d:
            return m


def _invert(field: PrimeField, u: np.ndarray) -> np.ndarray:
    sol = field.solve(u, field.eye(u.shape[0]))
    assert sol is not None
    return sol


def base_change(m: PersistenceModule, rng: random.Random) -> PersistenceModule:
    """An isomorphic copy with random bases at every element."""
    field = m.field
    us = [random_invertible(field, rng, d) for d in m.dims]
    inv = [_invert(field, u) for u in us]
    maps = {
        (a, b): field.matmul(us[b], field.matmul(m.maps[(a, b)], inv[a]))
        for a, b in m.poset.covers
    }
    return PersistenceModule(m.poset, field, m.dims, maps, validate=False)


def random_spread_sum(p: Poset, field: PrimeField, rng: random.Random,
                      spreads=None, max_summands: int = 3) -> PersistenceModule:
    if spreads is None:
        spreads = enumerate_spreads(p, "connected_all")
    k = rng.randint(1, max_summands)
    picks = [spreads[rng.randrange(len(spreads))] for _ in range(k)]
    return direct_sum([spread_module(s, field) for s in picks])


def random_module(p: Poset, field: PrimeField, rng: random.Random,
                  spreads=None, max_summands: int = 3) -> PersistenceModule:
    """A random module with pointwise dimension at most max_summands."""
    if spreads is None:
        spreads = enumerate_spreads(p, "connected_all")
    m = random_spread_sum(p, field, rng, spreads, max_summands)
    if rng.random() < 0.4:
        # replace by the kernel of a random morphism into another sum
        n = random_spread_sum(p, field, rng, spreads, max_summands)
        hb = hom_basis(m, n)
        if hb.basis:
            coeffs = [rng.randrange(field.p) for _ in hb.basis]
            f = hb.linear_combination(coeffs)
            ker, _ = kernel_module(f)
            if not ker.is_zero():
                m = ker
    return base_change(m, rng)
