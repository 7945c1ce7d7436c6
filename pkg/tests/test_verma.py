from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_lc.dyck import enumerate_patterns
from schubert_lc.errors import NotGrassmannian
from schubert_lc.verma import (
    GradedFactor,
    GrassPermutation,
    highest_weight,
    partition_to_perm,
    perm_to_partition,
    verma_layer,
    verma_weight_filtration,
)
from schubert_lc.young import GrassContext, Partition, subpartitions

P = Partition


def test_layers_of_322():
    ctx = GrassContext(3, 6)
    N = verma_weight_filtration(ctx, (3, 2, 2))
    assert N.layers == {
        11: Counter({P([3, 2, 2]): 1}),
        12: Counter({P([2, 2, 2]): 1, P([3, 2, 1]): 1}),
        13: Counter({P([3]): 1, P([2, 2, 1]): 1, P([1]): 1}),
        14: Counter({P([2]): 1}),
    }
    M = verma_weight_filtration(ctx, (3, 2, 2), dual=False)
    assert M.as_counter() == Counter({(-p, c): m for (p, c), m in N.as_counter().items()})
    assert verma_layer(ctx, (3, 2, 2), 13) == N.layers[13]


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_multiplicity_free_and_contiguous(k, n):
    ctx = GrassContext(k, n)
    for a in ctx.partitions():
        N = verma_weight_filtration(ctx, a)
        assert all(m == 1 for m in N.labels().values())
        ws = N.weights()
        assert ws == list(range(2 * ctx.dim - a.size, ws[-1] + 1))
        assert len(N) == len(enumerate_patterns(a, 1, 0))


def test_highest_weights():
    assert str(highest_weight(GrassContext(4, 9), (5, 4, 2, 2))) == "(0,-1,-3,-3 | 3,2,2,0,0)"
    assert highest_weight(GrassContext(2, 4), (1,)).vector == (-1, -2, 2, 1)
    assert set(highest_weight(GrassContext(3, 7), (4, 4, 4)).vector) == {0}


def test_perm_dictionary_extremes():
    ctx = GrassContext(3, 7)
    assert partition_to_perm(ctx, ()).images == tuple(range(1, 8))
    assert partition_to_perm(ctx, ctx.rectangle()).images == (5, 6, 7, 1, 2, 3, 4)


def test_perm_roundtrip_and_length():
    ctx = GrassContext(2, 5)
    for a in ctx.partitions():
        w = partition_to_perm(ctx, a)
        assert perm_to_partition(ctx, w) == a
        assert w.length == a.size


def test_not_grassmannian():
    with pytest.raises(NotGrassmannian):
        GrassPermutation((2, 1, 3), 2)
    with pytest.raises(NotGrassmannian):
        GrassPermutation((1, 1, 3), 1)


def test_graded_factor():
    f = GradedFactor(5, (2, 1))
    assert f.tate_twist == -1
    assert f.to_json() == {"label": [2, 1], "twist": -1, "mult": 1}
    with pytest.raises(ValueError):
        GradedFactor(4, (2, 1))


def test_module_json_shape():
    N = verma_weight_filtration(GrassContext(2, 4), (2, 1))
    data = N.to_json()
    assert data["role"] == "N" and data["base"] == [2, 1]
    assert [layer["p"] for layer in data["layers"]] == [5, 6, 7]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(subpartitions((4, 4, 4))))
def test_lowest_layer_is_a(a):
    ctx = GrassContext(3, 7)
    N = verma_weight_filtration(ctx, a)
    assert N.layers[2 * ctx.dim - a.size] == Counter({a: 1})
