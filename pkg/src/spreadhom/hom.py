"""Hom spaces between persistence modules.

Two independent routes: an exact solver that turns naturality over all covers
into one linear system, and a combinatorial count valid when both modules are
spread modules.  Tests hold the two against each other; library callers get
the solver unless they explicitly ask for the combinatorial route.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PosetMismatchError
from .modules import Morphism, PersistenceModule, morphism_from_vec
from .poset import Spread, iter_mask


@dataclass
class HomBasis:
    source: PersistenceModule
    target: PersistenceModule
    basis: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        """Basis vectors as columns (vec layout of Morphism.vec)."""
        u = sum(self.source.dims[a] * self.target.dims[a] for a in range(self.source.poset.n))
        if not self.basis:
            return np.zeros((u, 0), dtype=np.int64)
        return np.stack([f.vec() for f in self.basis], axis=1)

    def linear_combination(self, coeffs) -> Morphism:
        field = self.source.field
        coeffs = field.arr(coeffs).reshape(-1)
        if coeffs.shape[0] != len(self.basis):
            raise ValueError(f"{coeffs.shape[0]} coefficients for {len(self.basis)} basis morphisms")
        v = (self.matrix() @ coeffs) % field.p
        return morphism_from_vec(self.source, self.target, v)


def _naturality_system(m: PersistenceModule, n: PersistenceModule) -> np.ndarray:
    """Rows: one equation block per cover; columns: unknown entries of all f_a.

    Unknowns are ordered element-major, each component column-major, matching
    Morphism.vec.  For a cover (a, b) the equation f_b M_ab - N_ab f_a = 0
    vectorizes to kron(M_ab^T, I) vec(f_b) - kron(I, N_ab) vec(f_a) = 0.
    """
    p = m.poset
    field = m.field
    sizes = [m.dims[a] * n.dims[a] for a in range(p.n)]
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    total = int(offsets[-1])
    rows = []
    for a, b in p.covers:
        neq = n.dims[b] * m.dims[a]
        if neq == 0:
            continue
        block = np.zeros((neq, total), dtype=np.int64)
        if sizes[b]:
            block[:, offsets[b]:offsets[b + 1]] = np.kron(m.maps[(a, b)].T, np.eye(n.dims[b], dtype=np.int64))
        if sizes[a]:
            block[:, offsets[a]:offsets[a + 1]] = (
                block[:, offsets[a]:offsets[a + 1]]
                - np.kron(np.eye(m.dims[a], dtype=np.int64), n.maps[(a, b)])
            )
        rows.append(block % field.p)
    if not rows:
        return np.zeros((0, total), dtype=np.int64)
    return np.concatenate(rows, axis=0)


def hom_basis(m: PersistenceModule, n: PersistenceModule) -> HomBasis:
    """A basis of the space of morphisms m -> n, deterministic for fixed input."""
    if m.poset != n.poset:
        raise PosetMismatchError("hom endpoints live over different posets")
    if m.field != n.field:
        raise PosetMismatchError("hom endpoints use different primes")
    system = _naturality_system(m, n)
    kernel = m.field.kernel_basis(system)
    basis = tuple(
        morphism_from_vec(m, n, kernel[:, j], validate=False)
        for j in range(kernel.shape[1])
    )
    return HomBasis(m, n, basis)


def hom_dim(m: PersistenceModule, n: PersistenceModule, method: str = "auto") -> int:
    """dim Hom(m, n).  method: auto | solver | spread."""
    if method not in ("auto", "solver", "spread"):
        raise ValueError(f"unknown method {method!r}")
    if method != "solver" and m.spread is not None and n.spread is not None:
        return spread_hom_dim(m.spread, n.spread)
    if method == "spread":
        raise ValueError("spread method needs both modules tagged with their spread")
    if m.poset != n.poset:
        raise PosetMismatchError("hom endpoints live over different posets")
    system = _naturality_system(m, n)
    unknowns = system.shape[1]
    return unknowns - m.field.rank(system)


def spread_hom_dim(s: Spread, t: Spread) -> int:
    """dim Hom of two spread modules, counted combinatorially.

    Components X of the support intersection are counted when every source of
    s lying below X belongs to X and every target of t lying above X belongs
    to X.
    """
    if s.poset != t.poset:
        raise PosetMismatchError("spreads live over different posets")
    p = s.poset
    count = 0
    for comp in p.connected_components(s.support & t.support):
        ok = True
        for a in iter_mask(s.sources):
            if p.up_mask(a) & comp and not (comp >> a & 1):
                ok = False
                break
        if ok:
            for d in iter_mask(t.targets):
                if p.down_mask(d) & comp and not (comp >> d & 1):
                    ok = False
                    break
        if ok:
            count += 1
    return count


def kernel_module(f: Morphism):
    """The kernel subfunctor of a morphism; returns (module, inclusion)."""
    m, n = f.source, f.target
    field = m.field
    p = m.poset
    bases = [field.kernel_basis(f.components[a]) for a in range(p.n)]
    dims = tuple(b.shape[1] for b in bases)
    maps = {}
    for a, b in p.covers:
        # M_ab maps ker f_a into ker f_b; rewrite in the kernel bases.
        img = field.matmul(m.maps[(a, b)], bases[a])
        sol = field.solve(bases[b], img)
        if sol is None:  # naturality guarantees solvability
            raise AssertionError("kernel is not preserved by a structure map")
        maps[(a, b)] = sol
    k = PersistenceModule(p, field, dims, maps, validate=False)
    incl = Morphism(k, m, bases, validate=False)
    return k, incl


def image_module(f: Morphism):
    """The image subfunctor of a morphism; returns (module, inclusion into target)."""
    m, n = f.source, f.target
    field = m.field
    p = m.poset
    bases = [field.column_space_basis(f.components[a]) for a in range(p.n)]
    dims = tuple(b.shape[1] for b in bases)
    maps = {}
    for a, b in p.covers:
        img = field.matmul(n.maps[(a, b)], bases[a])
        sol = field.solve(bases[b], img)
        if sol is None:
            raise AssertionError("image is not preserved by a structure map")
        maps[(a, b)] = sol
    i = PersistenceModule(p, field, dims, maps, validate=False)
    incl = Morphism(i, n, bases, validate=False)
    return i, incl
