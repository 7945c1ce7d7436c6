"""Weight-graded parabolic Verma modules and the partition/permutation dictionary.

Modules are modelled only at the level of labelled multisets: a
WeightGradedModule maps each weight p to the simple factors L(c) sitting in
gr_p.  The normalisation puts L(a) in weight 2 d_X - |a| of N(a).
"""

from collections import Counter
from dataclasses import dataclass, field

from .dyck import Z_set, enumerate_patterns
from .errors import NotGrassmannian
from .young import Partition, complement, conjugate


@dataclass(frozen=True, order=True)
class GradedFactor:
    """One copy (or several, via multiplicity) of L(label) in weight p."""

    weight: int
    label: Partition
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "label", Partition(self.label))
        if (self.label.size - self.weight) % 2:
            raise ValueError(f"|{self.label}| - {self.weight} is odd; twist would not be integral")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def tate_twist(self):
        return (self.label.size - self.weight) // 2

    def to_json(self):
        return {"label": list(self.label), "twist": self.tate_twist, "mult": self.multiplicity}


@dataclass
class WeightGradedModule:
    """weight -> Counter(label -> multiplicity)."""

    role: str  # "N", "M" or "H"
    base: Partition
    layers: dict = field(default_factory=dict)

    def add(self, weight, label, mult=1):
        self.layers.setdefault(weight, Counter())[Partition(label)] += mult

    def factors(self):
        """Sorted list of GradedFactor."""
        out = []
        for p in sorted(self.layers):
            for label, m in sorted(self.layers[p].items(), key=lambda lm: (-lm[0].size, lm[0])):
                if m:
                    out.append(GradedFactor(p, label, m))
        return out

    def labels(self):
        """Multiset of labels, weights forgotten (the Grothendieck-group class)."""
        total = Counter()
        for layer in self.layers.values():
            total.update(layer)
        return +total

    def as_counter(self):
        """Counter over (weight, label)."""
        return Counter({(p, c): m for p, layer in self.layers.items() for c, m in layer.items() if m})

    def weights(self):
        return sorted(p for p, layer in self.layers.items() if any(layer.values()))

    def __len__(self):
        return sum(self.labels().values())

    def __eq__(self, other):
        if not isinstance(other, WeightGradedModule):
            return NotImplemented
        return self.as_counter() == other.as_counter()

    def to_json(self):
        return {
            "role": self.role,
            "base": list(self.base),
            "layers": [
                {"p": p, "factors": [f.to_json() for f in self.factors() if f.weight == p]}
                for p in self.weights()
            ],
        }


def verma_weight_filtration(ctx, a, dual=True):
    """gr^W of N(a) (dual=True) or M(a) (dual=False)."""
    a = ctx.check(a)
    module = WeightGradedModule("N" if dual else "M", a)
    for pattern in enumerate_patterns(a, 1, 0):
        p = 2 * ctx.dim - a.size + pattern.r
        module.add(p if dual else -p, pattern.quotient)
    return module


def verma_layer(ctx, a, p):
    """gr_p N(a) computed directly from Z_p(a)."""
    return Counter(pattern.quotient for pattern in Z_set(ctx, a, p))


@dataclass(frozen=True)
class HighestWeight:
    """Length-n weight vector; `split` marks the bar after position k."""

    vector: tuple
    split: int

    def __str__(self):
        left = ",".join(map(str, self.vector[: self.split]))
        right = ",".join(map(str, self.vector[self.split :]))
        return f"({left} | {right})"


def highest_weight(ctx, a):
    """lambda_{a,n} = (-a^c_k, ..., -a^c_1 | (a^c)'_1, ..., (a^c)'_{n-k})."""
    ac = complement(a, ctx)
    left = [-ac.part(i) for i in range(ctx.k, 0, -1)]
    right = list(conjugate(ac).padded(ctx.width))
    return HighestWeight(tuple(left + right), ctx.k)


@dataclass(frozen=True)
class GrassPermutation:
    """Minimal coset representative (i_1 < ... < i_k, i_{k+1} < ... < i_n)."""

    images: tuple
    k: int

    def __post_init__(self):
        w = tuple(self.images)
        object.__setattr__(self, "images", w)
        n = len(w)
        if sorted(w) != list(range(1, n + 1)):
            raise NotGrassmannian(f"{w} is not a permutation of 1..{n}")
        head, tail = w[: self.k], w[self.k :]
        if list(head) != sorted(head) or list(tail) != sorted(tail):
            raise NotGrassmannian(f"{w} is not increasing on both blocks of sizes {self.k}, {n - self.k}")

    @property
    def length(self):
        """Number of inversions."""
        w = self.images
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def partition_to_perm(ctx, a):
    a = ctx.check(a)
    head = [a.part(ctx.k + 1 - i) + i for i in range(1, ctx.k + 1)]
    tail = [x for x in range(1, ctx.n + 1) if x not in head]
    return GrassPermutation(tuple(head + tail), ctx.k)


def perm_to_partition(ctx, w):
    if not isinstance(w, GrassPermutation):
        w = GrassPermutation(tuple(w), ctx.k)
    if len(w.images) != ctx.n or w.k != ctx.k:
        raise NotGrassmannian(f"{w.images} does not belong to Gr({ctx.k},{ctx.n})")
    i = w.images
    return Partition([i[ctx.k - j] - (ctx.k + 1 - j) for j in range(1, ctx.k + 1)])
