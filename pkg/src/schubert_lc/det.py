"""Determinantal varieties and the singular locus of a Schubert variety.

The variety of m x n matrices (m >= n) of rank at most p is the restriction
of the Schubert variety of p̂ = (m^p, p^(n-p)) in Gr(n, n+m) to the opposite
big cell, and its rank strata D_s carry the labels (m^s, s^(n-s)).  The
generating polynomials below record, for one label, its multiplicity in
H^j as the coefficient of q^j.
"""

from collections import Counter
from dataclasses import dataclass

from .cousin import local_cohomology_formula
from .errors import RankOutOfRange, UnexpectedFactorLabel
from .young import GrassContext, Partition


class IntPolynomial:
    """Integer polynomial in q stored as {exponent: nonzero coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if isinstance(coeffs, IntPolynomial):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        merged = Counter()
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent")
            merged[int(e)] += int(c)
        self.coeffs = {e: c for e, c in sorted(merged.items()) if c}

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls({exp: coef})

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other):
        out = Counter(self.coeffs)
        out.update(IntPolynomial(other).coeffs)
        return IntPolynomial(out)

    def __sub__(self, other):
        out = Counter(self.coeffs)
        out.subtract(IntPolynomial(other).coeffs)
        return IntPolynomial(dict(out))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({e: c * other for e, c in self.coeffs.items()})
        out = Counter()
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] += c1 * c2
        return IntPolynomial(dict(out))

    __rmul__ = __mul__

    def substitute_power(self, k):
        """p(q) -> p(q^k)."""
        return IntPolynomial({e * k: c for e, c in self.coeffs.items()})

    def at_one(self):
        return sum(self.coeffs.values())

    def is_palindromic(self):
        if not self.coeffs:
            return True
        lo, hi = min(self.coeffs), max(self.coeffs)
        return all(self.coeffs.get(e, 0) == self.coeffs.get(lo + hi - e, 0) for e in range(lo, hi + 1))

    def to_pairs(self):
        return [[e, c] for e, c in self.coeffs.items()]

    def __repr__(self):
        return f"IntPolynomial({self.coeffs})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in self.coeffs.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)


def gaussian_binomial(a, b, squared=False):
    """binom(a, b) in q (or q^2): partitions in a b x (a-b) box counted by size.

    binom(a, 0) is 1 for every a, including a = -1; otherwise the polynomial
    is zero when b < 0 or b > a.
    """
    if b == 0:
        poly = IntPolynomial({0: 1})
    elif b < 0 or b > a:
        poly = IntPolynomial()
    else:
        # row i of the table counts partitions with at most i parts bounded by a-b
        width = a - b
        counts = [Counter({0: 1}) for _ in range(width + 1)]  # counts[w]: parts <= w, rows so far
        for _ in range(b):
            nxt = []
            for w in range(width + 1):
                c = Counter()
                # choose the largest part x <= w, the rest is a partition with parts <= x
                for x in range(w + 1):
                    for e, m in counts[x].items():
                        c[e + x] += m
                nxt.append(c)
            counts = nxt
        poly = IntPolynomial(dict(counts[width]))
    return poly.substitute_power(2) if squared else poly


@dataclass(frozen=True)
class DetInstance:
    """Matrices of size m x n (m >= n) with rank at most p."""

    m: int
    n: int
    p: int

    def __post_init__(self):
        if not (1 <= self.n <= self.m):
            raise ValueError(f"need 1 <= n <= m, got m={self.m}, n={self.n}")
        if not (0 <= self.p <= self.n):
            raise RankOutOfRange(f"rank bound {self.p} outside 0..{self.n}")

    @property
    def context(self):
        return GrassContext(self.n, self.n + self.m)

    @property
    def partition(self):
        return stratum_label(self.m, self.n, self.p)

    @property
    def codim(self):
        return (self.m - self.p) * (self.n - self.p)


def stratum_label(m, n, s):
    """(m^s, s^(n-s))."""
    return Partition([m] * s + [s] * (n - s))


def det_multiplicity_closed_form(inst, s):
    if not (0 <= s <= inst.p):
        raise RankOutOfRange(f"s={s} outside 0..{inst.p}")
    m, n, p = inst.m, inst.n, inst.p
    shift = (n - p) ** 2 + (n - s) * (m - n)
    return IntPolynomial.monomial(shift) * gaussian_binomial(n - s - 1, p - s, squared=True)


@dataclass
class DetEnumeration:
    polys: dict  # s -> IntPolynomial
    weights_ok: dict  # s -> bool


def det_multiplicity_enumerated(inst):
    """Group the pattern-formula factors of p̂ by rank stratum."""
    labels = {stratum_label(inst.m, inst.n, s): s for s in range(inst.p + 1)}
    result = local_cohomology_formula(inst.context, inst.partition)
    coeffs = {s: Counter() for s in range(inst.p + 1)}
    weights_ok = {s: True for s in range(inst.p + 1)}
    mn = inst.m * inst.n
    for j, module in result.items():
        for (weight, label), mult in module.as_counter().items():
            s = labels.get(label)
            if s is None:
                raise UnexpectedFactorLabel(f"L{label} in H^{j} is not a rank stratum of {inst}")
            coeffs[s][j] += mult
            if weight != mn + inst.p - s + j:
                weights_ok[s] = False
    return DetEnumeration({s: IntPolynomial(dict(c)) for s, c in coeffs.items()}, weights_ok)


# -- singular locus ----------------------------------------------------------


def blocks(a):
    """(value, multiplicity) for the distinct nonzero parts, largest first."""
    out = []
    for x in Partition(a):
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [tuple(b) for b in out]


def hook_partition(a, i):
    """a^i: strip the hook joining block i to block i+1 (1-based)."""
    a = Partition(a)
    bl = blocks(a)
    (x, _), (y, d) = bl[i - 1], bl[i]
    last = sum(m for _, m in bl[:i])  # 1-based row index of the last row of block i
    parts = list(a)
    parts[last - 1] -= x - y + 1
    for r in range(last, last + d):
        parts[r] -= 1
    return Partition(parts)


def singular_locus_closed_form(ctx, a, i):
    a = ctx.check(a)
    bl = blocks(a)
    (x, _), (y, d) = bl[i - 1], bl[i]
    gap = x - y
    lo, hi = abs(gap - d), gap + d - 2
    return IntPolynomial({ctx.codim(a) + e: 1 for e in range(lo, hi + 1, 2)})


def singular_locus_enumerated(ctx, a, label):
    coeffs = Counter()
    for q, module in local_cohomology_formula(ctx, a).items():
        coeffs[q] += module.labels().get(Partition(label), 0)
    return IntPolynomial(dict(coeffs))


@dataclass(frozen=True)
class SingularComponent:
    index: int
    label: Partition
    closed_form: IntPolynomial
    enumerated: IntPolynomial

    @property
    def match(self):
        return self.closed_form == self.enumerated


def singular_locus_multiplicities(ctx, a):
    a = ctx.check(a)
    out = []
    for i in range(1, len(blocks(a))):
        label = hook_partition(a, i)
        out.append(
            SingularComponent(i, label, singular_locus_closed_form(ctx, a, i), singular_locus_enumerated(ctx, a, label))
        )
    return out
