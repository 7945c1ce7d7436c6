"""Young diagrams inside the k x (n-k) rectangle.

Boxes use matrix coordinates: row 1 is the top row and rows grow downward,
column 1 is the leftmost column.  "North" of (i, j) is (i-1, j) and "East"
is (i, j+1).  The level of a box is i + j, constant along antidiagonals.
"""

import re
from collections import namedtuple
from dataclasses import dataclass
from itertools import product

from .errors import BoxOutsideDiagram, DoesNotFit, NotWeaklyDecreasing, ParseError


class Box(namedtuple("Box", "row col")):
    __slots__ = ()

    @property
    def level(self):
        return self.row + self.col


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian Gr(k, n) of k-planes in an n-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        if not (0 < self.k < self.n):
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def width(self):
        return self.n - self.k

    @property
    def dim(self):
        """d_X = k(n-k)."""
        return self.k * (self.n - self.k)

    def rectangle(self):
        return Partition([self.width] * self.k)

    def fits(self, a):
        return len(a) <= self.k and (not a or a[0] <= self.width)

    def check(self, a):
        """Return `a` as a Partition, raising DoesNotFit if it is too big."""
        a = Partition(a)
        if not self.fits(a):
            raise DoesNotFit(f"{a} does not fit in a {self.k}x{self.width} rectangle")
        return a

    def codim(self, a):
        return self.dim - sum(a)

    def partitions(self):
        return subpartitions(self.rectangle())


class Partition(tuple):
    """A weakly decreasing tuple of positive integers (trailing zeros trimmed).

    Being a tuple, a Partition hashes and compares like its parts, so
    ``Partition([2, 1, 0]) == (2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        for x, y in zip(parts, parts[1:]):
            if x < y:
                raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "()"

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """a_i with 1-based index, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def boxes(self):
        return frozenset(Box(i + 1, j + 1) for i, r in enumerate(self) for j in range(r))

    def __contains__(self, box):
        i, j = box
        return i >= 1 and j >= 1 and j <= self.part(i)

    def contains(self, other):
        """b ⊆ a, i.e. b_i <= a_i for every i."""
        return len(other) <= len(self) and all(x <= y for x, y in zip(other, self))

    def is_rectangle(self):
        return len(set(self)) <= 1

    def padded(self, k):
        return tuple(self) + (0,) * (k - len(self))

    @classmethod
    def from_boxes(cls, boxes):
        """Partition whose diagram is `boxes`, or None if the set is not a diagram."""
        rows = {}
        for i, j in boxes:
            rows.setdefault(i, []).append(j)
        if not rows:
            return cls()
        parts = []
        for i in range(1, max(rows) + 1):
            cols = sorted(rows.get(i, ()))
            if cols != list(range(1, len(cols) + 1)):
                return None
            if parts and len(cols) > parts[-1]:
                return None
            parts.append(len(cols))
        return cls(parts)


def parse_partition(text):
    """Parse "5,4,2,2" or "5 4 2 2"; "" and "0" give the empty partition."""
    text = text.strip()
    if text in ("", "0", "()", "∅"):
        return Partition()
    tokens = [t for t in re.split(r"[\s,]+", text.strip("()[]")) if t]
    try:
        parts = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"bad partition text {text!r}") from None
    if any(x < 0 for x in parts):
        raise ParseError(f"negative part in {text!r}")
    return Partition(parts)


def subpartitions(a, size=None):
    """All b ⊆ a, ordered by size and then reverse-lexicographically.

    For a = (2,1) this gives (), (1), (2), (1,1), (2,1).
    """
    a = Partition(a)
    out = []

    def rec(i, bound, acc):
        if i == len(a):
            out.append(Partition(acc))
            return
        for x in range(min(bound, a[i]), -1, -1):
            rec(i + 1, x, acc + [x])

    rec(0, a[0] if a else 0, [])
    if size is not None:
        out = [b for b in out if b.size == size]
    out.sort(key=lambda b: (b.size, [-x for x in b]))
    return out


def complement(a, ctx):
    """a^c with (a^c)_i = (n-k) - a_{k+1-i}."""
    a = ctx.check(a)
    return Partition([ctx.width - a.part(ctx.k + 1 - i) for i in range(1, ctx.k + 1)])


def conjugate(a):
    a = Partition(a)
    if not a:
        return a
    return Partition([sum(1 for x in a if x >= j) for j in range(1, a[0] + 1)])


def corners(a):
    """Removable boxes (i, a_i) with a_i > a_{i+1}."""
    a = Partition(a)
    return frozenset(Box(i, a.part(i)) for i in range(1, len(a) + 1) if a.part(i) > a.part(i + 1))


def addable(a, k=None):
    """Boxes that can be added to `a` keeping a partition (rows up to k)."""
    a = Partition(a)
    rows = len(a) + 1 if k is None else min(len(a) + 1, k)
    return frozenset(
        Box(i, a.part(i) + 1) for i in range(1, rows + 1) if i == 1 or a.part(i - 1) > a.part(i)
    )


def remove_boxes(a, boxes):
    r"""Partition a \ boxes, or None when the remaining boxes are not a diagram."""
    a = Partition(a)
    boxes = set(boxes)
    for b in boxes:
        if b not in a:
            raise BoxOutsideDiagram(f"box {tuple(b)} is not in {a}")
    return Partition.from_boxes(a.boxes() - boxes)


GLYPHS = {
    "unicode": {"cell": "□", "path": "■", "bullet": "●", "empty": "∅"},
    "ascii": {"cell": ".", "path": "#", "bullet": "o", "empty": "()"},
}


def render(a, overlays=(), ascii=False):
    """Draw the diagram of `a` one row per line.

    `overlays` is a sequence of (boxes, glyph); later overlays win.  A glyph
    may also be one of the names "path" or "bullet".
    """
    a = Partition(a)
    style = GLYPHS["ascii" if ascii else "unicode"]
    if not a:
        return style["empty"]
    marks = {}
    for boxes, glyph in overlays:
        glyph = style.get(glyph, glyph)
        for b in boxes:
            if b not in a:
                raise BoxOutsideDiagram(f"overlay box {tuple(b)} is not in {a}")
            marks[tuple(b)] = glyph
    lines = []
    for i, r in enumerate(a, start=1):
        lines.append(" ".join(marks.get((i, j), style["cell"]) for j in range(1, r + 1)))
    return "\n".join(lines)


def all_partitions(k, width):
    """Every partition in a k x width rectangle (same order as subpartitions)."""
    return subpartitions([width] * k)


def is_antichain(boxes):
    """No box lies weakly South-East of another."""
    boxes = list(boxes)
    for x, y in product(boxes, boxes):
        if x != y and x[0] <= y[0] and x[1] <= y[1]:
            return False
    return True
