from collections import Counter

import pytest

import brute
from schubert_lc.cousin import (
    OracleBudget,
    bijection_check,
    bijection_image,
    bijection_pairs,
    build_graded_complex,
    cohomology_counter,
    compare,
    dsq_check,
    euler_check,
    extension_set,
    gc_terms,
    graded_basis,
    koszul_check,
    koszul_decomposition,
    local_cohomology_formula,
    local_cohomology_oracle,
    lowest_layer,
    rational_smoothness,
)
from schubert_lc.dyck import A_set, DyckPattern
from schubert_lc.errors import BudgetExceeded, InvalidPair
from schubert_lc.young import GrassContext, Partition

P = Partition
G24 = GrassContext(2, 4)
HOOK = DyckPattern((2, 1), [[(2, 1), (1, 1), (1, 2)]])


def test_gc_terms_hook():
    cx = gc_terms(G24, (2, 1))
    assert cx.terms == {1: [(2, 1)], 2: [(2,), (1, 1)], 3: [(1,)], 4: [()]}
    assert len(cx.differentials) == 5


def test_formula_hook():
    res = local_cohomology_formula(G24, (2, 1))
    assert list(res) == [1]
    assert res[1].layers == {5: Counter({P([2, 1]): 1}), 6: Counter({P(): 1})}


def test_extension_sets():
    assert extension_set((2, 1), (2,), DyckPattern((2,))).boxes == {(2, 1)}
    assert extension_set((2, 1), (2, 1), HOOK).boxes == frozenset()
    with pytest.raises(InvalidPair):
        extension_set((2, 1), (3,), DyckPattern((3,)))


def test_koszul_blocks_at_weight_six():
    blocks = koszul_decomposition(G24, (2, 1), 6)
    keys = sorted((b.sub, b.pattern.r) for b in blocks)
    assert keys == [((1, 1), 0), ((2,), 0), ((2, 1), 1)]
    blocks5 = koszul_decomposition(G24, (2, 1), 5)
    assert [(b.sub, b.pattern.r) for b in blocks5] == [((2, 1), 0)]


def test_graded_complex_weight_seven():
    cx = build_graded_complex(G24, (2, 1), 7, (1,))
    assert cx.dims() == {1: 1, 2: 2, 3: 1}
    assert cx.ranks() == {1: 1, 2: 1}
    assert set(cx.cohomology().values()) == {0}
    assert cx.dsq_zero()


def test_graded_complex_weight_six_empty_label():
    cx = build_graded_complex(G24, (2, 1), 6, ())
    assert cx.dims() == {1: 1}
    assert cx.cohomology() == {1: 1}


def test_entries_are_signs():
    ctx = GrassContext(3, 6)
    for (p, c) in graded_basis(ctx, (3, 2, 1)):
        cx = build_graded_complex(ctx, (3, 2, 1), p, c)
        for m in cx.matrices.values():
            assert set(m.entries.values()) <= {1, -1}


def test_bijection_example():
    ctx, a = GrassContext(4, 9), P([5, 4, 2, 2])
    pairs = bijection_pairs(ctx, a, 8, 30)
    assert len(pairs) == 1
    assert {bijection_image(a, *pairs[0])} == set(A_set(ctx, a, 8, 30))
    assert bijection_pairs(ctx, a, 7, 27) == [(a, DyckPattern(a))]


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5)])
def test_structural_checks(k, n):
    ctx = GrassContext(k, n)
    for a in ctx.partitions():
        assert euler_check(ctx, a).ok
        assert dsq_check(ctx, a).ok
        assert koszul_check(ctx, a).ok
        assert bijection_check(ctx, a).ok


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5), (2, 6)])
def test_formula_matches_brute_force(k, n):
    """Independent check: pattern formula against the naive enumerator."""
    ctx = GrassContext(k, n)
    for a in ctx.partitions():
        assert cohomology_counter(local_cohomology_formula(ctx, a)) == brute.local_cohomology(k, n, a)


def test_oracle_matches_formula_on_example_one_two():
    ctx, a = GrassContext(4, 9), (5, 4, 2, 2)
    f = local_cohomology_formula(ctx, a)
    assert compare(f, local_cohomology_oracle(ctx, a, OracleBudget(20))) == []
    assert euler_check(ctx, a, f).ok


def test_oracle_parallel_is_deterministic():
    ctx, a = GrassContext(3, 6), (3, 2, 1)
    serial = local_cohomology_oracle(ctx, a)
    parallel = local_cohomology_oracle(ctx, a, workers=2)
    assert cohomology_counter(serial) == cohomology_counter(parallel)


def test_budget():
    with pytest.raises(BudgetExceeded):
        local_cohomology_oracle(GrassContext(4, 9), (5, 4, 2, 2))
    with pytest.raises(BudgetExceeded):
        build_graded_complex(G24, (2, 1), 7, (1,), OracleBudget(16, 3))


def test_budget_env(monkeypatch):
    monkeypatch.setenv("SCHUBERT_LC_ORACLE_BUDGET", "9,100")
    assert OracleBudget.from_env() == OracleBudget(9, 100)
    monkeypatch.delenv("SCHUBERT_LC_ORACLE_BUDGET")
    assert OracleBudget.from_env() == OracleBudget(16, 50_000)
    with pytest.raises(ValueError):
        OracleBudget(0)


def test_rational_smoothness_examples():
    assert rational_smoothness(GrassContext(2, 5), (3, 3))
    assert not rational_smoothness(G24, (2, 1))


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6)])
def test_lowest_layer(k, n):
    ctx = GrassContext(k, n)
    for a in ctx.partitions():
        assert lowest_layer(ctx, a) == Counter({a: 1})


@pytest.mark.parametrize("k,n", [(3, 7), (4, 8), (2, 10)])
def test_extended_sweep_up_to_budget(k, n):
    """Beyond the acceptance sweep: every partition up to d_X = 16."""
    ctx = GrassContext(k, n)
    for a in ctx.partitions():
        f = local_cohomology_formula(ctx, a)
        assert compare(f, local_cohomology_oracle(ctx, a)) == []
        assert koszul_check(ctx, a).ok
        assert bijection_check(ctx, a).ok
        assert euler_check(ctx, a, f).ok
