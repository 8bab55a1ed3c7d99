import random

import numpy as np
import pytest

from spreadhom import (
    CommutativityError,
    HookOrderError,
    Morphism,
    NotComparableError,
    PersistenceModule,
    PosetMismatchError,
    ShapeError,
    direct_sum,
    hook_module,
    identity_morphism,
    interval_module,
    morphism_from_vec,
    projective_module,
    simple_module,
    spread_from_antichains,
    spread_module,
    summand_inclusions,
    zero_module,
    zero_morphism,
)
from spreadhom.gallery import chain, funnel, grid
from spreadhom.poset import elements_of
from spreadhom.randmod import random_module

from helpers import mask_to_set


def test_missing_maps_filled_with_zeros(field):
    p = chain(3)
    m = PersistenceModule(p, field, [1, 1, 0])
    assert m.map_along(0, 1).shape == (1, 1)
    assert m.map_along(0, 1).tolist() == [[0]]
    assert m.map_along(1, 2).shape == (0, 1)


def test_shape_validation(field):
    p = chain(2)
    with pytest.raises(ShapeError):
        PersistenceModule(p, field, [1, 1], {(0, 1): [[1, 2]]})  # wants 1x1
    with pytest.raises(ShapeError):
        PersistenceModule(p, field, [1])  # wrong dims length
    with pytest.raises(ShapeError):
        PersistenceModule(p, field, [1, -1])
    with pytest.raises(ShapeError):
        # (0, 1) is fine but (1, 0) is not a cover
        PersistenceModule(p, field, [1, 1], {(1, 0): [[1]]})


def test_commutativity_enforced(field):
    p = grid(2, 2)
    e = {lbl: p.element(lbl) for lbl in p.names}
    maps = {
        (e["00"], e["01"]): [[1]],
        (e["00"], e["10"]): [[1]],
        (e["01"], e["11"]): [[1]],
        (e["10"], e["11"]): [[2]],  # 1*1 != 2*1 around the square
    }
    with pytest.raises(CommutativityError):
        PersistenceModule(p, field, [1, 1, 1, 1], maps)
    maps[(e["10"], e["11"])] = [[1]]
    PersistenceModule(p, field, [1, 1, 1, 1], maps)  # now fine


def test_map_along_is_path_product(field, rng):
    p = funnel()
    for _ in range(10):
        m = random_module(p, field, rng)
        for a in range(p.n):
            for b in range(p.n):
                if not p.leq(a, b):
                    continue
                got = m.map_along(a, b)
                # multiply along one explicit greedy cover path
                path = [a]
                while path[-1] != b:
                    nxt = next(c for c in p.children(path[-1]) if p.leq(c, b))
                    path.append(nxt)
                acc = field.eye(m.dim(a))
                for x, y in zip(path, path[1:]):
                    acc = field.matmul(m.map_along(x, y), acc)
                assert np.array_equal(got, acc)


def test_map_along_incomparable_raises(field):
    p = grid(2, 2)
    m = zero_module(p, field)
    with pytest.raises(NotComparableError):
        m.map_along(p.element("01"), p.element("10"))


def test_spread_module_shape(field):
    p = grid(2, 2)
    s = spread_from_antichains(p, ["00"], ["01", "10"])
    m = spread_module(s, field)
    assert m.dimension_vector() == (1, 1, 1, 0)
    assert m.map_along(p.element("00"), p.element("01")).tolist() == [[1]]
    assert m.spread == s
    assert mask_to_set(m.support_mask()) == set(elements_of(s.support))


def test_named_module_builders(field):
    p = funnel()
    proj = projective_module(p, field, 0)
    assert proj.dimension_vector() == (1, 1, 0, 1, 1)
    simp = simple_module(p, field, 3)
    assert simp.dimension_vector() == (0, 0, 0, 1, 0)
    ivl = interval_module(p, field, 0, 3)
    assert ivl.dimension_vector() == (1, 1, 0, 1, 0)
    hook = hook_module(p, field, 0, 3)
    assert hook.dimension_vector() == (1, 1, 0, 0, 0)
    full_hook = hook_module(p, field, 0)
    assert full_hook.dimension_vector() == proj.dimension_vector()
    with pytest.raises(HookOrderError):
        hook_module(p, field, 0, 2)  # 2 is not above 0


def test_direct_sum_and_inclusions(field, rng):
    p = grid(2, 2)
    parts = [random_module(p, field, rng) for _ in range(3)]
    total = direct_sum(parts)
    assert total.dimension_vector() == tuple(
        sum(q.dim(a) for q in parts) for a in range(p.n)
    )
    incs = summand_inclusions(total, parts)
    for inc in incs:
        inc2 = Morphism(inc.source, inc.target, inc.components)  # re-validate
        assert inc2.target is total
    # inclusions have pairwise orthogonal, jointly full column spans
    for a in range(p.n):
        stacked = np.concatenate([inc.components[a] for inc in incs], axis=1)
        assert stacked.shape == (total.dim(a), total.dim(a))
        assert field.rank(stacked) == total.dim(a)


def test_zero_and_total_dim(field):
    p = chain(3)
    z = zero_module(p, field)
    assert z.is_zero() and z.total_dim() == 0
    m = interval_module(p, field, 0, 2)
    assert not m.is_zero() and m.total_dim() == 3


def test_restrict_commutes(field, rng):
    p = grid(2, 2)
    for _ in range(5):
        m = random_module(p, field, rng)
        mask = p.interval_mask(p.element("00"), p.element("11")) & ~(1 << p.element("10"))
        sub_m, sub = m.restrict(mask)
        assert sub_m.poset is sub.poset
        # re-validate the restricted maps from scratch
        PersistenceModule(
            sub.poset,
            field,
            [sub_m.dim(i) for i in range(sub.poset.n)],
            {(i, j): sub_m.map_along(i, j) for i, j in sub.poset.covers},
        )
        for i in range(sub.poset.n):
            assert sub_m.dim(i) == m.dim(sub.to_parent(i))


def test_morphism_validation(field):
    p = chain(2)
    m = interval_module(p, field, 0, 1)
    top = simple_module(p, field, 1)
    bottom = simple_module(p, field, 0)
    # the top simple includes, the interval projects onto the bottom simple
    Morphism(top, m, [field.zeros(1, 0), field.arr([[1]])])
    Morphism(m, bottom, [field.arr([[1]]), field.zeros(0, 1)])
    # the reverse directions break naturality along the cover
    with pytest.raises(CommutativityError):
        Morphism(m, top, [field.zeros(0, 1), field.arr([[1]])])
    with pytest.raises(CommutativityError):
        Morphism(bottom, m, [field.arr([[1]]), field.zeros(1, 0)])
    with pytest.raises(ShapeError):
        Morphism(m, top, [field.zeros(1, 1), field.arr([[1]])])
    with pytest.raises(PosetMismatchError):
        Morphism(m, interval_module(chain(3), field, 0, 0), [field.arr([[1]]), field.zeros(0, 1)])


def test_morphism_composition(field):
    p = chain(3)
    top = simple_module(p, field, 2)
    mid = interval_module(p, field, 1, 2)
    full = interval_module(p, field, 0, 2)
    inc = Morphism(top, mid, [field.zeros(0, 0), field.zeros(1, 0), field.arr([[1]])])
    ext = Morphism(mid, full, [field.zeros(1, 0), field.arr([[1]]), field.arr([[1]])])
    composite = ext @ inc
    assert composite.source is top and composite.target is full
    assert composite.components[2].tolist() == [[1]]
    assert composite.components[1].shape == (1, 0)
    z = zero_morphism(full, top)
    assert z.is_zero()
    assert (z @ ext).is_zero()


def test_vec_round_trip(field, rng):
    p = grid(2, 2)
    m = random_module(p, field, rng)
    n = random_module(p, field, rng)
    f = zero_morphism(m, n)
    v = f.vec()
    assert morphism_from_vec(m, n, v) == f
    # a nonzero natural map: scalar multiple of identity on m
    g = Morphism(m, m, [field.arr(2 * np.eye(m.dim(a), dtype=np.int64)) for a in range(p.n)])
    assert morphism_from_vec(m, m, g.vec(), validate=True) == g


def test_identity_is_neutral(field, rng):
    p = funnel()
    m = random_module(p, field, rng)
    i = identity_morphism(m)
    assert i @ i == i
