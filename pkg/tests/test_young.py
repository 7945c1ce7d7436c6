from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_lc.errors import BoxOutsideDiagram, DoesNotFit, NotWeaklyDecreasing, ParseError
from schubert_lc.young import (
    Box,
    GrassContext,
    Partition,
    addable,
    all_partitions,
    complement,
    conjugate,
    corners,
    is_antichain,
    parse_partition,
    remove_boxes,
    render,
    subpartitions,
)


def partitions_in(k, w):
    return st.lists(st.integers(0, w), min_size=0, max_size=k).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_parse_and_trim():
    assert parse_partition("5,4,2,2") == (5, 4, 2, 2)
    assert parse_partition("5 4 2 2") == (5, 4, 2, 2)
    assert parse_partition("2,1,0") == (2, 1)
    assert parse_partition("") == ()
    assert parse_partition("0") == ()


def test_parse_errors():
    with pytest.raises(NotWeaklyDecreasing):
        parse_partition("1,2")
    with pytest.raises(ParseError):
        parse_partition("a,b")
    with pytest.raises(ParseError):
        parse_partition("3,-1")


def test_context_basics():
    ctx = GrassContext(4, 9)
    assert ctx.dim == 20
    assert ctx.codim((5, 4, 2, 2)) == 7
    assert ctx.rectangle() == (5, 5, 5, 5)
    with pytest.raises(DoesNotFit):
        ctx.check((6,))
    with pytest.raises(DoesNotFit):
        ctx.check((1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        GrassContext(3, 3)


def test_partition_boxes_and_str():
    a = Partition([2, 1])
    assert a.boxes() == {Box(1, 1), Box(1, 2), Box(2, 1)}
    assert str(a) == "(2,1)"
    assert str(Partition()) == "()"
    assert Box(2, 3).level == 5
    assert (2, 1) in a and (2, 2) not in a and (0, 1) not in a


def test_subpartition_order():
    assert subpartitions((2, 1)) == [(), (1,), (2,), (1, 1), (2, 1)]


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6), (4, 8)])
def test_rectangle_has_binomial_many_subpartitions(k, n):
    assert len(GrassContext(k, n).partitions()) == comb(n, k)
    assert len(all_partitions(k, n - k)) == comb(n, k)


def test_complement_example():
    assert complement((3, 2, 2), GrassContext(3, 6)) == (1, 1)


def test_corners_and_addable():
    assert corners((5, 4, 2, 2)) == {Box(1, 5), Box(2, 4), Box(4, 2)}
    assert addable((2, 1)) == {Box(1, 3), Box(2, 2), Box(3, 1)}
    assert addable((2, 1), k=2) == {Box(1, 3), Box(2, 2)}
    assert corners(()) == frozenset()


def test_remove_boxes():
    assert remove_boxes((2, 1), [(2, 1)]) == (2,)
    assert remove_boxes((2, 1), [(1, 1)]) is None
    with pytest.raises(BoxOutsideDiagram):
        remove_boxes((2, 1), [(3, 3)])


def test_render_glyphs():
    assert render((2, 1)) == "□ □\n□"
    assert render((2, 1), [([(1, 2)], "path"), ([(2, 1)], "bullet")], ascii=True) == ". #\no"
    assert render(()) == "∅"
    assert render((), ascii=True) == "()"
    with pytest.raises(BoxOutsideDiagram):
        render((1,), [([(2, 2)], "path")])


def test_antichain():
    assert is_antichain([(1, 2), (2, 1)])
    assert not is_antichain([(1, 1), (2, 2)])


@given(partitions_in(5, 6))
def test_conjugate_involution(a):
    assert conjugate(conjugate(a)) == a
    assert conjugate(a).size == a.size


@given(partitions_in(4, 5))
def test_complement_involution(a):
    ctx = GrassContext(4, 9)
    assert complement(complement(a, ctx), ctx) == a
    assert complement(a, ctx).size == ctx.dim - a.size


@given(partitions_in(4, 5))
def test_from_boxes_roundtrip(a):
    assert Partition.from_boxes(a.boxes()) == a


@given(partitions_in(4, 4))
def test_corners_are_an_antichain_and_removable(a):
    cs = corners(a)
    assert is_antichain(cs)
    for c in cs:
        assert remove_boxes(a, [c]).size == a.size - 1


def test_not_weakly_decreasing():
    with pytest.raises(NotWeaklyDecreasing):
        Partition([1, 3])
