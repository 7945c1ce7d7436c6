"""Exact rank of small sparse integer matrices.

Rows are dicts {column: value}.  Elimination is fraction-free over the
integers, with each new row divided by the gcd of its entries so that
coefficients stay small.  A modular rank is available as a cross-check.
"""

import random
from dataclasses import dataclass, field
from math import gcd

# primes just below 2**31
CHECK_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549)


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)  # (row, col) -> nonzero int

    def __setitem__(self, key, value):
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def rows(self):
        out = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        right = other.rows()
        out = SparseMatrix(self.nrows, other.ncols)
        for (i, k), v in self.entries.items():
            for j, w in right[k].items():
                out.entries[(i, j)] = out.entries.get((i, j), 0) + v * w
        out.entries = {key: v for key, v in out.entries.items() if v}
        return out

    def is_zero(self):
        return not self.entries

    def to_dense(self):
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense

    def rank(self, cross_check=False):
        r = rank_exact(self.rows())
        if cross_check:
            for p in random.sample(CHECK_PRIMES, 2):
                rp = rank_mod_p(self.rows(), p)
                # rank mod p can only drop; for +-1 matrices of this size a drop
                # at a ~2^31 prime means a bug, not bad luck
                if rp != r:
                    raise ArithmeticError(f"rank over Q is {r} but rank mod {p} is {rp}")
        return r


def _normalize(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def rank_exact(rows):
    """Rank over Q of the matrix whose rows are sparse dicts."""
    pivots = {}  # column -> reduced row with that leading column
    rank = 0
    for row in rows:
        row = {j: v for j, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _normalize(row)
                rank += 1
                break
            a, b = piv[col], row[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {j: fa * v for j, v in row.items()}
            for j, v in piv.items():
                x = new.get(j, 0) - fb * v
                if x:
                    new[j] = x
                else:
                    new.pop(j, None)
            row = _normalize(new)
    return rank


def rank_mod_p(rows, p):
    pivots = {}
    rank = 0
    for row in rows:
        row = {j: v % p for j, v in row.items() if v % p}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {j: v * inv % p for j, v in row.items()}
                rank += 1
                break
            f = row[col]
            for j, v in piv.items():
                x = (row.get(j, 0) - f * v) % p
                if x:
                    row[j] = x
                else:
                    row.pop(j, None)
    return rank


def cohomology_dims(dims, diffs):
    """Cohomology of a cochain complex.

    dims: {degree: dimension}; diffs: {degree j: SparseMatrix C^j -> C^{j+1}}
    with rows indexing C^{j+1} and columns indexing C^j.
    """
    ranks = {j: m.rank() for j, m in diffs.items()}
    return {j: d - ranks.get(j, 0) - ranks.get(j - 1, 0) for j, d in dims.items()}
