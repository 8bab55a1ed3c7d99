"""Right approximations and resolutions by a fixed family of spread modules.

A Family is a finite set of connected spreads (their modules are bricks and
pairwise non-isomorphic, which the minimality formula below relies on).
Multiplicities of the minimal approximation of M are computed as
dim Hom(R, M) minus the dimension of the span of all composites through the
other members; representatives of a complement realize the approximation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DuplicateMemberError,
    MissingProjectivesError,
    NotConnectedError,
    NotQuotientClosedError,
    OutOfRangeError,
    PosetMismatchError,
    SpreadHomError,
)
from .field import PrimeField
from .hom import HomBasis, hom_basis, hom_dim, kernel_module, spread_hom_dim
from .modules import (
    Morphism,
    PersistenceModule,
    direct_sum,
    spread_module,
    zero_module,
)
from .poset import Poset, Spread, enumerate_spreads, spread_from_convex

BUILTIN_FAMILIES = (
    "projectives",
    "hooks",
    "intervals",
    "single_source",
    "connected_spreads",
    "connected_upsets",
)


class Family:
    """An ordered set of pairwise-distinct connected spreads over one poset."""

    def __init__(self, poset: Poset, members, *, quotient_closed: bool = False,
                 restricted_support: int | None = None):
        self.poset = poset
        members = tuple(members)
        seen = set()
        for s in members:
            if s.poset != poset:
                raise PosetMismatchError(f"member {s.render()} lives over a different poset")
            if not s.is_connected():
                raise NotConnectedError(f"member {s.render()} has disconnected support")
            if s.support in seen:
                raise DuplicateMemberError(f"member {s.render()} appears twice")
            seen.add(s.support)
        self.members = members
        self.quotient_closed = quotient_closed
        self.restricted_support = restricted_support
        self._index = {s.support: i for i, s in enumerate(members)}
        self._modules: dict[int, list[PersistenceModule]] = {}
        self._pair_hom: dict[tuple[int, int, int], HomBasis] = {}
        self._hom_matrix: tuple[tuple[int, ...], ...] | None = None

    def __len__(self):
        return len(self.members)

    def labels(self) -> tuple[str, ...]:
        return tuple(s.render() for s in self.members)

    def index_of(self, spread: Spread) -> int:
        try:
            return self._index[spread.support]
        except KeyError:
            raise KeyError(f"{spread.render()} is not a member") from None

    @property
    def contains_projectives(self) -> bool:
        return not self.missing_projectives()

    def missing_projectives(self) -> tuple[str, ...]:
        return tuple(
            self.poset.label(a)
            for a in range(self.poset.n)
            if self.poset.up_mask(a) not in self._index
        )

    def member_modules(self, field: PrimeField) -> list[PersistenceModule]:
        mods = self._modules.get(field.p)
        if mods is None:
            mods = [spread_module(s, field) for s in self.members]
            self._modules[field.p] = mods
        return mods

    def pair_hom(self, field: PrimeField, i: int, j: int) -> HomBasis:
        key = (field.p, i, j)
        hb = self._pair_hom.get(key)
        if hb is None:
            mods = self.member_modules(field)
            hb = hom_basis(mods[i], mods[j])
            self._pair_hom[key] = hb
        return hb

    def hom_matrix(self) -> tuple[tuple[int, ...], ...]:
        """H[i][j] = dim Hom(member_i, member_j), combinatorial and field-free."""
        if self._hom_matrix is None:
            self._hom_matrix = tuple(
                tuple(spread_hom_dim(s, t) for t in self.members) for s in self.members
            )
        return self._hom_matrix


def builtin_family(poset: Poset, name: str, cap: int = 100_000) -> Family:
    """One of the named families; see BUILTIN_FAMILIES."""
    if name == "projectives":
        spreads = sorted(
            {poset.up_mask(a) for a in range(poset.n)}
        )
        members = [spread_from_convex(poset, m) for m in spreads]
        return Family(poset, members)
    kind = {
        "hooks": "hook",
        "intervals": "interval",
        "single_source": "single_source",
        "connected_spreads": "connected_all",
        "connected_upsets": "connected_upset",
    }.get(name)
    if kind is None:
        raise ValueError(f"unknown family name {name!r}; expected one of {BUILTIN_FAMILIES}")
    members = enumerate_spreads(poset, kind, cap)
    closed = name in ("single_source", "connected_spreads", "connected_upsets")
    return Family(poset, members, quotient_closed=closed)


@dataclass
class FamilyDiagnostics:
    contains_projectives: bool
    missing_projectives: tuple[str, ...]
    hom_matrix: tuple[tuple[int, ...], ...]
    hom_acyclic: bool
    topo_order: tuple[int, ...] | None   # members ordered so Hom(i,j) != 0 => i first
    hom_cycle: tuple[int, ...] | None    # member indices of one directed cycle


def _hom_digraph_topo(h) -> tuple[tuple[int, ...] | None, tuple[int, ...] | None]:
    """Topological order of i -> j whenever h[i][j] != 0 (i != j), or a cycle."""
    n = len(h)
    succs = [[j for j in range(n) if j != i and h[i][j]] for i in range(n)]
    indeg = [0] * n
    for i in range(n):
        for j in succs[i]:
            indeg[j] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    import heapq

    heapq.heapify(ready)
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in succs[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(order) == n:
        return tuple(order), None
    # find one cycle among the leftovers by walking successors
    stuck = [i for i in range(n) if indeg[i] > 0]
    walk = [stuck[0]]
    seen = {stuck[0]: 0}
    while True:
        cur = walk[-1]
        nxt = next(j for j in succs[cur] if indeg[j] > 0)
        if nxt in seen:
            return None, tuple(walk[seen[nxt]:])
        seen[nxt] = len(walk)
        walk.append(nxt)


def check_family(x: Family, require_projectives: bool = False) -> FamilyDiagnostics:
    """Structural diagnostics: projective coverage and the Hom digraph."""
    missing = x.missing_projectives()
    if require_projectives and missing:
        raise MissingProjectivesError(
            f"family lacks the principal up-sets at {{{', '.join(missing)}}}"
        )
    h = x.hom_matrix()
    topo, cycle = _hom_digraph_topo(h)
    return FamilyDiagnostics(
        contains_projectives=not missing,
        missing_projectives=missing,
        hom_matrix=h,
        hom_acyclic=topo is not None,
        topo_order=topo,
        hom_cycle=cycle,
    )


def _require_coverage(x: Family, m: PersistenceModule):
    if x.contains_projectives:
        return
    if x.restricted_support is not None and m.support_mask() & ~x.restricted_support == 0:
        return  # restriction of a covering family; sufficient by the factoring argument
    raise MissingProjectivesError(
        f"family lacks the principal up-sets at {{{', '.join(x.missing_projectives())}}}"
    )


def _assemble(x: Family, m: PersistenceModule, picks) -> Morphism:
    """Morphism ⊕ R_i^{len(picks[i])} -> m whose columns are the picked maps."""
    field = m.field
    mods = x.member_modules(field)
    summands = []
    columns = []
    for i, fs in enumerate(picks):
        for f in fs:
            summands.append(mods[i])
            columns.append(f)
    if not summands:
        return Morphism(zero_module(m.poset, field), m,
                        [field.zeros(m.dims[a], 0) for a in range(m.poset.n)],
                        validate=False)
    dom = direct_sum(summands)
    comps = []
    for a in range(m.poset.n):
        blocks = [f.components[a] for f in columns]
        comps.append(np.concatenate(blocks, axis=1) if blocks else field.zeros(m.dims[a], 0))
    return Morphism(dom, m, comps, validate=False)


def _check_epi(f: Morphism):
    field = f.source.field
    for a in range(f.source.poset.n):
        if field.rank(f.components[a]) != f.target.dims[a]:
            raise SpreadHomError(
                f"approximation fails to be onto at {f.source.poset.label(a)}"
            )


def universal_approximation(x: Family, m: PersistenceModule) -> Morphism:
    """The epimorphism ⊕_R R^{dim Hom(R,m)} -> m collecting full Hom bases."""
    _require_coverage(x, m)
    mods = x.member_modules(m.field)
    picks = [hom_basis(r, m).basis for r in mods]
    f = _assemble(x, m, picks)
    _check_epi(f)
    return f


def minimal_approximation(x: Family, m: PersistenceModule):
    """Multiplicity vector and morphism of the minimal right approximation.

    Multiplicity at member R is dim Hom(R,m) minus the rank of the span of
    composites R -> R' -> m over the other members R'; the representatives
    are read off the pivots of one elimination per member.
    """
    _require_coverage(x, m)
    field = m.field
    mods = x.member_modules(field)
    bases = [hom_basis(r, m) for r in mods]
    multiplicities = []
    picks = []
    for i in range(len(x)):
        vecs = bases[i].matrix()
        rad_cols = []
        for j in range(len(x)):
            if j == i or not bases[j].basis:
                continue
            through = x.pair_hom(field, i, j)
            for h in through.basis:
                for g in bases[j].basis:
                    rad_cols.append((g @ h).vec())
        if rad_cols:
            rad = np.stack(rad_cols, axis=1)
        else:
            rad = np.zeros((vecs.shape[0], 0), dtype=np.int64)
        _, pivots = field.rref(np.concatenate([rad, vecs], axis=1))
        chosen = [p - rad.shape[1] for p in pivots if p >= rad.shape[1]]
        multiplicities.append(len(chosen))
        picks.append([bases[i].basis[c] for c in chosen])
    f = _assemble(x, m, picks)
    _check_epi(f)
    return tuple(multiplicities), f


@dataclass
class Resolution:
    """Iterated minimal approximations of successive kernels."""

    family: Family
    module: PersistenceModule
    terms: tuple[tuple[int, ...], ...]          # multiplicity vector per degree
    approximations: tuple[Morphism, ...]        # term k onto kernel k-1 (or module)
    kernels: tuple[PersistenceModule, ...]
    kernel_inclusions: tuple[Morphism, ...]
    status: str                                 # "finite" | "truncated"
    periodicity: tuple[int, int] | None = None  # kernels with matching signatures

    @property
    def depth(self) -> int:
        return len(self.terms)

    def connecting(self, k: int) -> Morphism:
        """The chain map R_k -> R_{k-1} (k >= 1) through the kernel inclusion."""
        if not 1 <= k < len(self.terms):
            raise OutOfRangeError(f"no connecting map at degree {k}")
        return self.kernel_inclusions[k - 1] @ self.approximations[k]


def _kernel_signature(x: Family, k: PersistenceModule):
    profile = tuple(hom_dim(r, k) for r in x.member_modules(k.field))
    return k.dims, profile


def resolve(x: Family, m: PersistenceModule, max_depth: int = 32) -> Resolution:
    """Resolve m by minimal approximations until the kernel dies or depth runs out."""
    terms = []
    approxs = []
    kernels = []
    inclusions = []
    current = m
    status = "truncated"
    while True:
        if current.is_zero():
            status = "finite"
            break
        if len(terms) >= max_depth:
            break
        mult, f = minimal_approximation(x, current)
        terms.append(mult)
        approxs.append(f)
        ker, incl = kernel_module(f)
        kernels.append(ker)
        inclusions.append(incl)
        current = ker
    periodicity = None
    if status == "truncated":
        sigs = [_kernel_signature(x, k) for k in kernels]
        found = False
        for i in range(len(sigs)):
            for j in range(i + 1, len(sigs)):
                if sigs[i] == sigs[j]:
                    periodicity = (i, j)
                    found = True
                    break
            if found:
                break
    return Resolution(
        family=x,
        module=m,
        terms=tuple(terms),
        approximations=tuple(approxs),
        kernels=tuple(kernels),
        kernel_inclusions=tuple(inclusions),
        status=status,
        periodicity=periodicity,
    )


def x_dimension(x: Family, m: PersistenceModule, max_depth: int = 32) -> int | None:
    """Length of the minimal resolution, or None when truncation leaves it unknown."""
    res = resolve(x, m, max_depth)
    if res.status != "finite":
        return None
    return max(len(res.terms) - 1, 0)


def betti(res: Resolution, k: int) -> tuple[int, ...]:
    """Multiplicity vector of resolution term k; zero beyond a finite resolution."""
    if k < 0:
        raise OutOfRangeError("negative degree")
    if k < len(res.terms):
        return res.terms[k]
    if res.status == "finite":
        return (0,) * len(res.family.members)
    raise OutOfRangeError(
        f"resolution truncated at depth {res.depth}; degree {k} is undetermined"
    )


def support_restrict(x: Family, m: PersistenceModule) -> Family:
    """Drop members whose support leaves supp(m); approximations of m are unchanged.

    Sound when every quotient of a member lies in add(x): any map R -> m then
    factors through members supported inside supp(m).
    """
    if not x.quotient_closed:
        raise NotQuotientClosedError(
            "support restriction needs a family whose member quotients stay in add(family)"
        )
    supp = m.support_mask()
    keep = [s for s in x.members if s.support & ~supp == 0]
    if x.contains_projectives:
        allowed = supp
    elif x.restricted_support is not None and supp & ~x.restricted_support == 0:
        allowed = supp
    else:
        allowed = None
    return Family(x.poset, keep, quotient_closed=True, restricted_support=allowed)
