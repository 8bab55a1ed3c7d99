"""The invariant layer.

Grothendieck-style classes relative to a family (two independent algorithms),
dim-hom vectors, the classical rank invariant (directly and from hook Hom
spaces), generalized ranks over connected spreads, signed diagrams by Möbius
inversion over the containment order, the type-A barcode, and comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .approx import Family, builtin_family, check_family, resolve
from .errors import (
    DuplicateSpreadError,
    HomMatrixSingularError,
    NotConnectedError,
    NotTypeAError,
    PosetMismatchError,
    ResolutionTruncatedError,
    SpreadHomError,
    UnknownInvariantError,
)
from .hom import hom_dim
from .modules import PersistenceModule, hook_module
from .poset import Poset, Spread, containment_poset, elements_of

COMPARE_KINDS = ("dimvec", "rank", "class", "dimhom", "genrank", "diagram")


@dataclass
class GrothClass:
    """An integer combination of family members."""

    family: Family
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.family.members):
            raise ValueError("one coefficient per family member expected")

    def __add__(self, other: "GrothClass") -> "GrothClass":
        if other.family is not self.family and other.family.members != self.family.members:
            raise ValueError("classes relative to different families")
        return GrothClass(self.family, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, GrothClass)
            and self.family.poset == other.family.poset
            and [s.support for s in self.family.members] == [s.support for s in other.family.members]
            and self.coeffs == other.coeffs
        )

    def nonzero(self) -> dict[str, int]:
        return {
            s.render(): c for s, c in zip(self.family.members, self.coeffs) if c != 0
        }

    def render(self) -> str:
        parts = []
        for s, c in zip(self.family.members, self.coeffs):
            if c == 0:
                continue
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign}{mag}{s.render()}")
        return " ".join(parts) if parts else "0"


def dim_hom_vector(x: Family, m: PersistenceModule) -> tuple[int, ...]:
    """(dim Hom(R, m))_{R in x}; combinatorial when m itself is a spread module."""
    mods = x.member_modules(m.field)
    return tuple(hom_dim(r, m) for r in mods)


def class_via_resolution(x: Family, m: PersistenceModule, max_depth: int = 32) -> GrothClass:
    """Alternating sum of the terms of the minimal resolution."""
    res = resolve(x, m, max_depth)
    if res.status != "finite":
        raise ResolutionTruncatedError(
            f"resolution of {m!r} did not terminate within depth {max_depth}",
            terms=res.terms,
            depth=res.depth,
        )
    coeffs = [0] * len(x)
    sign = 1
    for term in res.terms:
        for i, c in enumerate(term):
            coeffs[i] += sign * c
        sign = -sign
    return GrothClass(x, tuple(coeffs))


def class_via_hom_matrix(x: Family, m: PersistenceModule) -> GrothClass:
    """Solve dim Hom(R', m) = Σ_R c_R dim Hom(R', R) over the integers.

    Needs the member-to-member Hom digraph to be acyclic: the matrix is then
    unitriangular in a topological order and back-substitution is exact.
    """
    diag = check_family(x)
    if not diag.hom_acyclic:
        cycle = " -> ".join(x.members[i].render() for i in diag.hom_cycle)
        raise HomMatrixSingularError(f"Hom digraph has a cycle: {cycle} -> ...")
    h = diag.hom_matrix
    b = dim_hom_vector(x, m)
    order = diag.topo_order
    c = [0] * len(x)
    for u in range(len(order) - 1, -1, -1):
        i = order[u]
        acc = b[i]
        for v in range(u + 1, len(order)):
            j = order[v]
            acc -= h[i][j] * c[j]
        c[i] = acc
    for i in range(len(x)):  # the system is small; re-check the solution exactly
        if sum(h[i][j] * c[j] for j in range(len(x))) != b[i]:
            raise SpreadHomError("hom-matrix back-substitution failed to verify")
    return GrothClass(x, tuple(c))


@dataclass
class RankInvariant:
    """rank M(a -> b) over all comparable pairs."""

    poset: Poset
    entries: dict[tuple[int, int], int]

    def __eq__(self, other):
        return (
            isinstance(other, RankInvariant)
            and self.poset == other.poset
            and self.entries == other.entries
        )

    def table(self) -> str:
        lines = []
        for (a, b), r in sorted(self.entries.items()):
            lines.append(f"{self.poset.label(a)} <= {self.poset.label(b)}: {r}")
        return "\n".join(lines)


def rank_invariant(m: PersistenceModule) -> RankInvariant:
    entries = {
        (a, b): m.field.rank(m.map_along(a, b))
        for a, b in m.poset.comparable_pairs()
    }
    return RankInvariant(m.poset, entries)


def rank_via_hooks(m: PersistenceModule) -> RankInvariant:
    """The same table assembled purely from Hom dimensions against hooks."""
    p = m.poset
    field = m.field
    at_source = {a: hom_dim(hook_module(p, field, a), m) for a in range(p.n)}
    entries = {}
    for a, b in p.comparable_pairs():
        if a == b:
            entries[(a, b)] = at_source[a]
        else:
            entries[(a, b)] = at_source[a] - hom_dim(hook_module(p, field, a, b), m)
    return RankInvariant(p, entries)


def generalized_rank(m: PersistenceModule, s: Spread) -> int:
    """Rank of the canonical map from the limit to the colimit over the spread."""
    if not s.is_connected():
        raise NotConnectedError(f"spread {s.render()} has disconnected support")
    field = m.field
    mr, sub = m.restrict(s.support)
    sp = sub.poset
    dims = mr.dims
    offsets = [0]
    for d in dims:
        offsets.append(offsets[-1] + d)
    total = offsets[-1]
    if total == 0:
        return 0
    # limit: families (v_i) with M_ij v_i = v_j along every induced cover
    rows = []
    for i, j in sp.covers:
        if dims[j] == 0:
            continue
        block = np.zeros((dims[j], total), dtype=np.int64)
        block[:, offsets[i]:offsets[i + 1]] = mr.maps[(i, j)]
        block[:, offsets[j]:offsets[j + 1]] -= np.eye(dims[j], dtype=np.int64)
        rows.append(block % field.p)
    system = np.concatenate(rows, axis=0) if rows else np.zeros((0, total), dtype=np.int64)
    lim = field.kernel_basis(system)
    # colimit: ⊕_i M(i) modulo ι_j M_ij v - ι_i v
    cols = []
    for i, j in sp.covers:
        mij = mr.maps[(i, j)]
        for k in range(dims[i]):
            col = np.zeros(total, dtype=np.int64)
            col[offsets[j]:offsets[j + 1]] = mij[:, k]
            col[offsets[i] + k] -= 1
            cols.append(col % field.p)
    rel = np.stack(cols, axis=1) if cols else np.zeros((total, 0), dtype=np.int64)
    # the canonical map reads off the component at one base vertex (any, by
    # connectedness) and takes its class in the colimit
    x0 = 0
    image = np.zeros_like(lim)
    image[offsets[x0]:offsets[x0 + 1], :] = lim[offsets[x0]:offsets[x0 + 1], :]
    return field.rank(np.concatenate([rel, image], axis=1)) - field.rank(rel)


@dataclass
class SignedDiagram:
    """Möbius inversion of the generalized ranks over a spread collection."""

    collection: tuple[Spread, ...]
    coeffs: tuple[int, ...]

    def __eq__(self, other):
        return (
            isinstance(other, SignedDiagram)
            and [s.support for s in self.collection] == [s.support for s in other.collection]
            and self.coeffs == other.coeffs
        )

    def nonzero(self) -> dict[str, int]:
        return {s.render(): c for s, c in zip(self.collection, self.coeffs) if c != 0}

    def render(self) -> str:
        parts = []
        for s, c in zip(self.collection, self.coeffs):
            if c == 0:
                continue
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign}{mag}{s.render()}")
        return " ".join(parts) if parts else "0"


def generalized_rank_vector(m: PersistenceModule, collection) -> tuple[int, ...]:
    return tuple(generalized_rank(m, s) for s in collection)


def signed_diagram(m: PersistenceModule, collection) -> SignedDiagram:
    """δ(m, X) = Σ_{Y ⊇ X in the collection} μ(X, Y) · rk(m, Y)."""
    collection = tuple(collection)
    seen = set()
    for s in collection:
        if not s.is_connected():
            raise NotConnectedError(f"spread {s.render()} has disconnected support")
        if s.support in seen:
            raise DuplicateSpreadError(f"spread {s.render()} appears twice")
        seen.add(s.support)
    q = containment_poset(list(collection))
    ranks = [generalized_rank(m, s) for s in collection]
    coeffs = []
    for i in range(len(collection)):
        acc = 0
        for j in elements_of(q.up_mask(i)):
            acc += q.mobius(i, j) * ranks[j]
        coeffs.append(acc)
    return SignedDiagram(collection, tuple(coeffs))


def barcode(m: PersistenceModule, cap: int = 100_000) -> GrothClass:
    """Interval multiplicities over a path-shaped poset, as a class.

    Computed as the class relative to all connected spread modules, which on
    such posets is finite-dimensional business: resolutions stop by depth 2.
    """
    if m.poset.hasse_path_order() is None:
        raise NotTypeAError("the Hasse graph of the poset is not a simple path")
    fam = builtin_family(m.poset, "connected_spreads", cap)
    return class_via_resolution(fam, m)


def compare(kind: str, m: PersistenceModule, n: PersistenceModule, *,
            family: Family | None = None, collection=None,
            max_depth: int = 32) -> str:
    """'equal' or 'distinguished' under the named invariant.

    kind: dimvec | rank | class | dimhom | genrank | diagram.  class and
    dimhom need family=, genrank and diagram need collection=.
    """
    if m.poset != n.poset:
        raise PosetMismatchError("modules being compared live over different posets")
    if kind == "dimvec":
        same = m.dims == n.dims
    elif kind == "rank":
        same = rank_invariant(m) == rank_invariant(n)
    elif kind == "class":
        if family is None:
            raise ValueError("kind 'class' needs family=")
        if check_family(family).hom_acyclic:
            same = class_via_hom_matrix(family, m) == class_via_hom_matrix(family, n)
        else:
            same = (
                class_via_resolution(family, m, max_depth)
                == class_via_resolution(family, n, max_depth)
            )
    elif kind == "dimhom":
        if family is None:
            raise ValueError("kind 'dimhom' needs family=")
        same = dim_hom_vector(family, m) == dim_hom_vector(family, n)
    elif kind == "genrank":
        if collection is None:
            raise ValueError("kind 'genrank' needs collection=")
        same = generalized_rank_vector(m, collection) == generalized_rank_vector(n, collection)
    elif kind == "diagram":
        if collection is None:
            raise ValueError("kind 'diagram' needs collection=")
        same = signed_diagram(m, collection) == signed_diagram(n, collection)
    else:
        raise UnknownInvariantError(
            f"unknown invariant {kind!r}; expected one of {COMPARE_KINDS}"
        )
    return "equal" if same else "distinguished"
