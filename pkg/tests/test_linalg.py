import random

from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_lc.linalg import SparseMatrix, cohomology_dims, rank_exact, rank_mod_p


def dense_rank(rows):
    """Rank via Fraction Gaussian elimination, a plain reference."""
    from fractions import Fraction

    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def to_sparse(rows):
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150)
@given(matrices)
def test_rank_matches_fraction_elimination(rows):
    assert rank_exact(to_sparse(rows)) == dense_rank(rows)


@settings(max_examples=50)
@given(matrices)
def test_rank_mod_large_prime(rows):
    assert rank_mod_p(to_sparse(rows), 2147483647) == dense_rank(rows)


def test_rank_mod_small_prime_can_drop():
    assert rank_exact([{0: 2}]) == 1
    assert rank_mod_p([{0: 2}], 2) == 0


def test_matmul_and_zero():
    a = SparseMatrix(2, 2, {(0, 0): 1, (1, 0): 1})
    b = SparseMatrix(2, 2, {(0, 0): 1, (0, 1): -1})
    assert (a @ b).to_dense() == [[1, -1], [1, -1]]
    c = SparseMatrix(1, 2, {(0, 0): 1, (0, 1): 1})
    d = SparseMatrix(2, 1, {(0, 0): 1, (1, 0): -1})
    assert (c @ d).is_zero()


def test_cross_check_runs():
    random.seed(0)
    m = SparseMatrix(3, 3, {(0, 0): 1, (1, 1): 1, (2, 0): 1, (2, 1): 1})
    assert m.rank(cross_check=True) == 2


def test_cohomology_of_short_exact_sequence():
    # 0 -> Z -> Z^2 -> Z -> 0
    d0 = SparseMatrix(2, 1, {(0, 0): 1, (1, 0): 1})
    d1 = SparseMatrix(1, 2, {(0, 0): 1, (0, 1): -1})
    assert cohomology_dims({0: 1, 1: 2, 2: 1}, {0: d0, 1: d1}) == {0: 0, 1: 0, 2: 0}
    assert cohomology_dims({0: 1, 1: 2, 2: 1}, {}) == {0: 1, 1: 2, 2: 1}
