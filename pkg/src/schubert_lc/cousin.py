"""Grothendieck–Cousin complex of a Schubert variety and its cohomology.

Two independent routes to the weight-graded local cohomology of Z_a:

* the pattern formula: H^q in weight p is spanned by L(a^D) over admissible
  augmented patterns D (paths of length >= 3) with q + |a| - d_X bullets and
  p - q - d_X paths;
* the oracle: assemble gr^W_p of the Cousin complex for each simple label,
  with the degree-j term spanned by pairs (b, X), b ⊆ a of size d_X - j and
  X a bullet-free pattern in b, and take exact ranks.

The oracle's differential uses only the graded rule for the natural map
N(b') -> N(b) with b = b' minus a corner k: L(b'^X') maps onto L(b^X) iff
X' = X plus the singleton path {k}, and to zero otherwise.  Scalars are not
modelled; a sign makes consecutive maps anticommute.
"""

import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .dyck import DyckPattern, augmented_patterns, enumerate_patterns
from .errors import BudgetExceeded, InvalidPair
from .linalg import SparseMatrix, cohomology_dims
from .verma import WeightGradedModule
from .young import Box, GrassContext, Partition, corners, subpartitions

DEFAULT_MAX_DIM = 16
DEFAULT_MAX_BASIS = 50_000
BUDGET_ENV = "SCHUBERT_LC_ORACLE_BUDGET"


@dataclass(frozen=True)
class OracleBudget:
    max_dim: int = DEFAULT_MAX_DIM
    max_basis: int = DEFAULT_MAX_BASIS

    @classmethod
    def from_env(cls):
        """Read "MAX_DIM" or "MAX_DIM,MAX_BASIS" from $SCHUBERT_LC_ORACLE_BUDGET."""
        raw = os.environ.get(BUDGET_ENV, "").strip()
        if not raw:
            return cls()
        parts = [int(x) for x in raw.split(",")]
        return cls(*parts[:2])

    def __post_init__(self):
        if self.max_dim <= 0 or self.max_basis <= 0:
            raise ValueError("budgets must be positive")


# -- Cousin terms ------------------------------------------------------------


@dataclass
class CousinComplex:
    ctx: GrassContext
    top: Partition
    terms: dict  # degree j -> list of b ⊆ a with |b| = d_X - j
    differentials: list  # (b', b) with b = b' minus one corner

    def term_sizes(self):
        return {j: len(bs) for j, bs in sorted(self.terms.items())}


def gc_terms(ctx, a):
    a = ctx.check(a)
    terms = defaultdict(list)
    for b in subpartitions(a):
        terms[ctx.dim - b.size].append(b)
    diffs = []
    for j in sorted(terms):
        for b in terms[j]:
            for k in sorted(corners(b)):
                diffs.append((b, _remove(b, k)))
    return CousinComplex(ctx, a, dict(sorted(terms.items())), diffs)


def _remove(b, k):
    parts = list(b)
    parts[k.row - 1] -= 1
    return Partition(parts)


def _add(b, box):
    parts = list(b) + [0]
    parts[box[0] - 1] += 1
    return Partition(parts)


# -- the pattern formula -----------------------------------------------------


def local_cohomology_formula(ctx, a):
    """q -> weight-graded H^q, read off admissible augmented patterns."""
    a = ctx.check(a)
    out = {}
    for pattern in augmented_patterns(a, 3):
        q = pattern.bullet_count - a.size + ctx.dim
        p = ctx.dim + q + pattern.r
        out.setdefault(q, WeightGradedModule("H", a)).add(p, pattern.quotient)
    return dict(sorted(out.items()))


def cohomology_counter(result):
    """Flatten q -> module into a Counter over (q, p, label)."""
    return Counter({(q, p, c): m for q, mod in result.items() for (p, c), m in mod.as_counter().items()})


# -- extension sets and Koszul blocks ----------------------------------------


@dataclass(frozen=True)
class ExtensionSet:
    base: Partition
    sub: Partition
    pattern: DyckPattern
    boxes: frozenset

    def __len__(self):
        return len(self.boxes)

    def closed_under_subsets(self):
        """Every J ⊆ I is jointly addable with admissible D ∪ J (exhaustive check)."""
        boxes = sorted(self.boxes)
        for size in range(len(boxes) + 1):
            for J in combinations(boxes, size):
                if _extend(self.sub, self.pattern, J) is None:
                    return False
        return True


def _extend(b, pattern, J):
    """(b ∪ J, D ∪ singletons(J)) if that is a partition with admissible pattern."""
    bigger = Partition.from_boxes(set(b.boxes()) | set(J))
    if bigger is None:
        return None
    X = DyckPattern(bigger, list(pattern.paths) + [[x] for x in J])
    if not X.admissible:
        return None
    return bigger, X


def extension_set(a, b, pattern):
    a, b = Partition(a), Partition(b)
    if not a.contains(b):
        raise InvalidPair(f"{b} is not contained in {a}")
    if pattern.partition != b or pattern.bullets or not pattern.admissible:
        raise InvalidPair("pattern must be an admissible bullet-free pattern in b")
    boxes = set()
    for x in a.boxes() - b.boxes():
        if _extend(b, pattern, [x]) is not None:
            boxes.add(x)
    return ExtensionSet(a, b, pattern, frozenset(boxes))


@dataclass
class KoszulBlock:
    top: Partition
    sub: Partition
    pattern: DyckPattern
    ext: ExtensionSet
    q: int
    weight: int

    @property
    def label(self):
        return self.pattern.quotient

    @property
    def span(self):
        return (self.q - len(self.ext), self.q)

    def basis(self):
        """degree j -> list of (b ∪ J, D ∪ J) for J ⊆ I with |J| = q - j."""
        out = {}
        boxes = sorted(self.ext.boxes)
        for size in range(len(boxes) + 1):
            out[self.q - size] = [_extend(self.sub, self.pattern, J) for J in combinations(boxes, size)]
        return out

    def term_dims(self):
        from math import comb

        m = len(self.ext)
        return {self.q - s: comb(m, s) for s in range(m + 1)}


def koszul_decomposition(ctx, a, p):
    a = ctx.check(a)
    blocks = []
    for b in subpartitions(a):
        q = ctx.dim - b.size
        r = p - q - ctx.dim
        if r < 0:
            continue
        for D in enumerate_patterns(b, 3, 0, r):
            blocks.append(KoszulBlock(a, b, D, extension_set(a, b, D), q, p))
    return blocks


def bijection_pairs(ctx, a, q, p):
    """(b, D) in Y_p(a; q) whose extension set is empty."""
    a = ctx.check(a)
    r = p - q - ctx.dim
    size = ctx.dim - q
    if r < 0 or size < 0:
        return []
    out = []
    for b in subpartitions(a, size):
        for D in enumerate_patterns(b, 3, 0, r):
            if not extension_set(a, b, D).boxes:
                out.append((b, D))
    return out


def bijection_image(a, b, D):
    """The augmented pattern with the paths of D and bullets a/b."""
    a = Partition(a)
    return DyckPattern(a, D.paths, a.boxes() - Partition(b).boxes())


# -- the oracle --------------------------------------------------------------


@lru_cache(maxsize=256)
def graded_basis(ctx, a):
    """(weight, label) -> degree -> list of basis pairs (b, X)."""
    a = ctx.check(a)
    out = defaultdict(lambda: defaultdict(list))
    for b in subpartitions(a):
        j = ctx.dim - b.size
        for X in enumerate_patterns(b, 1, 0):
            p = ctx.dim + j + X.r
            out[(p, X.quotient)][j].append((b, X))
    return {key: dict(sorted(v.items())) for key, v in sorted(out.items(), key=lambda kv: (kv[0][0], kv[0][1]))}


def sign(a, b_src, k):
    """(-1)^(number of boxes of a/b_src lexicographically before k)."""
    k = tuple(k)
    smaller = sum(1 for x in a.boxes() if x not in b_src and tuple(x) < k)
    return -1 if smaller % 2 else 1


@dataclass
class GradedChainComplex:
    label: Partition
    weight: int
    basis: dict  # degree -> list of (b, X)
    matrices: dict = field(default_factory=dict)  # degree j -> SparseMatrix C^j -> C^{j+1}

    def dims(self):
        return {j: len(v) for j, v in self.basis.items()}

    def size(self):
        return sum(self.dims().values())

    def cohomology(self):
        return cohomology_dims(self.dims(), self.matrices)

    def ranks(self):
        return {j: m.rank() for j, m in sorted(self.matrices.items())}

    def dsq_zero(self):
        for j, m in self.matrices.items():
            nxt = self.matrices.get(j + 1)
            if nxt is not None and not (nxt @ m).is_zero():
                return False
        return True

    def restricted(self, keep):
        """Subcomplex spanned by the basis elements in `keep`."""
        keep = set(keep)
        basis = {j: [x for x in v if x in keep] for j, v in self.basis.items()}
        return _assemble(self.top, self.label, self.weight, basis)

    top: Partition = None


def _assemble(a, label, weight, basis):
    cx = GradedChainComplex(label, weight, basis, top=a)
    index = {j: {x: i for i, x in enumerate(v)} for j, v in basis.items()}
    for j in sorted(basis):
        if j + 1 not in basis:
            continue
        m = SparseMatrix(len(basis[j + 1]), len(basis[j]))
        for col, (b_src, X) in enumerate(basis[j]):
            cs = corners(b_src)
            for path in X.paths:
                if len(path) != 1 or path[0] not in cs:
                    continue
                k = path[0]
                b = _remove(b_src, k)
                target = DyckPattern(b, [P for P in X.paths if P is not path])
                row = index[j + 1].get((b, target))
                if row is not None:
                    m[row, col] = sign(a, b_src, k)
        cx.matrices[j] = m
    return cx


def build_graded_complex(ctx, a, p, c, budget=None):
    a, c = ctx.check(a), Partition(c)
    budget = budget or OracleBudget()
    basis = graded_basis(ctx, a).get((p, c), {})
    total = sum(len(v) for v in basis.values())
    if total > budget.max_basis:
        raise BudgetExceeded(f"{total} basis elements for L{c} in weight {p} (limit {budget.max_basis})")
    return _assemble(a, c, p, basis)


def _oracle_piece(args):
    ctx, a, p, c, budget = args
    return (p, c), build_graded_complex(ctx, a, p, c, budget).cohomology()


def local_cohomology_oracle(ctx, a, budget=None, workers=1):
    """q -> weight-graded H^q computed by exact ranks of the graded Cousin complex."""
    a = ctx.check(a)
    budget = budget or OracleBudget.from_env()
    if ctx.dim > budget.max_dim:
        raise BudgetExceeded(f"Gr({ctx.k},{ctx.n}) with a={a}: d_X={ctx.dim} exceeds {budget.max_dim}")
    jobs = [(ctx, a, p, c, budget) for (p, c) in graded_basis(ctx, a)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(_oracle_piece, jobs, chunksize=8))
    else:
        pieces = [_oracle_piece(job) for job in jobs]
    out = {}
    for (p, c), coh in pieces:
        for q, dim in coh.items():
            if dim:
                out.setdefault(q, WeightGradedModule("H", a)).add(p, c, dim)
    return dict(sorted(out.items()))


# -- consistency checks ------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok


def euler_check(ctx, a, formula=None):
    """Alternating sums of term counts and of cohomology agree per (label, weight)."""
    a = ctx.check(a)
    formula = formula if formula is not None else local_cohomology_formula(ctx, a)
    chi_terms = Counter()
    for (p, c), by_deg in graded_basis(ctx, a).items():
        for j, elems in by_deg.items():
            chi_terms[(p, c)] += (-1) ** j * len(elems)
    chi_coh = Counter()
    for q, mod in formula.items():
        for (p, c), m in mod.as_counter().items():
            chi_coh[(p, c)] += (-1) ** q * m
    report = CheckReport("euler")
    for key in sorted(set(chi_terms) | set(chi_coh)):
        if chi_terms[key] != chi_coh[key]:
            report.failures.append((key, chi_terms[key], chi_coh[key]))
    return report


def dsq_check(ctx, a, budget=None):
    report = CheckReport("dsq_zero")
    for (p, c) in graded_basis(ctx, a):
        if not build_graded_complex(ctx, a, p, c, budget).dsq_zero():
            report.failures.append((p, c))
    return report


def koszul_check(ctx, a, budget=None):
    """Blocks tile the graded basis; a block is exact unless its extension set is empty."""
    a = ctx.check(a)
    report = CheckReport("koszul_exactness")
    weights = sorted({p for p, _ in graded_basis(ctx, a)})
    for p in weights:
        blocks = koszul_decomposition(ctx, a, p)
        covered = Counter()
        for blk in blocks:
            bb = blk.basis()
            if any(x is None for v in bb.values() for x in v):
                report.failures.append(("extension not closed", p, blk.sub, blk.pattern.paths))
                continue
            for j, v in bb.items():
                covered.update((j, x) for x in v)
            if {j: len(v) for j, v in bb.items()} != blk.term_dims():
                report.failures.append(("binomial profile", p, blk.sub))
            full = build_graded_complex(ctx, a, p, blk.label, budget)
            coh = full.restricted([x for v in bb.values() for x in v]).cohomology()
            expected = {blk.q: 1} if not blk.ext.boxes else {}
            if {j: d for j, d in coh.items() if d} != expected:
                report.failures.append(("block cohomology", p, blk.sub, coh))
        actual = Counter()
        for (pp, c), by_deg in graded_basis(ctx, a).items():
            if pp == p:
                for j, v in by_deg.items():
                    actual.update((j, x) for x in v)
        if covered != actual:
            report.failures.append(("block cover", p))
    return report


def bijection_check(ctx, a, formula_patterns=None):
    a = ctx.check(a)
    report = CheckReport("bijection")
    pats = formula_patterns if formula_patterns is not None else augmented_patterns(a, 3)
    by_qp = defaultdict(set)
    for D in pats:
        q = D.bullet_count - a.size + ctx.dim
        by_qp[(q, ctx.dim + q + D.r)].add(D)
    keys = set(by_qp)
    for q in range(ctx.codim(a), ctx.dim + 1):
        for r in range(0, ctx.dim + 1):
            keys.add((q, ctx.dim + q + r))
    for q, p in sorted(keys):
        pairs = bijection_pairs(ctx, a, q, p)
        image = {bijection_image(a, b, D) for b, D in pairs}
        if len(image) != len(pairs) or image != by_qp.get((q, p), set()):
            report.failures.append((q, p, len(pairs), len(by_qp.get((q, p), ()))))
    return report


def compare(formula, oracle):
    """Mismatches (q, p, label, formula mult, oracle mult)."""
    f, o = cohomology_counter(formula), cohomology_counter(oracle)
    return [(q, p, c, f[(q, p, c)], o[(q, p, c)]) for (q, p, c) in sorted(set(f) | set(o)) if f[(q, p, c)] != o[(q, p, c)]]


def rational_smoothness(ctx, a):
    """H^* is L(a) alone, in degree c(a)."""
    a = ctx.check(a)
    res = local_cohomology_formula(ctx, a)
    c = ctx.codim(a)
    return list(res) == [c] and res[c].labels() == Counter({a: 1})


def lowest_layer(ctx, a):
    a = ctx.check(a)
    c = ctx.codim(a)
    return local_cohomology_formula(ctx, a)[c].layers.get(ctx.dim + c, Counter())


__all__ = [
    "Box",
    "CousinComplex",
    "ExtensionSet",
    "GradedChainComplex",
    "KoszulBlock",
    "OracleBudget",
    "bijection_pairs",
    "build_graded_complex",
    "euler_check",
    "extension_set",
    "gc_terms",
    "koszul_decomposition",
    "local_cohomology_formula",
    "local_cohomology_oracle",
    "rational_smoothness",
]
