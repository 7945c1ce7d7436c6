"""Dyck paths, augmented Dyck patterns and their admissibility.

A Dyck path is a walk of boxes moving North or East that starts and ends on
the same antidiagonal and never goes below it.  An augmented pattern adds
bullets: contiguous runs East of a path's last box (head) and South of its
first box (tail).  A pattern is admissible when

1. removing its support from the diagram leaves a partition,
2. (covering) whenever some box of path Q sits directly N, NW or W of a box
   of path P, every box directly N, NW or W of P lies in P or Q,
3. no bullet sits directly N, NW or W of a path box.

Neighbours in condition 2 are taken literally, including positions outside
the positive quadrant, which can never lie in P or Q.  This is what makes
two side-by-side singletons in the first row inadmissible.
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import EmptyPath, NegativeBulletCount, NotAdmissible
from .young import Box, Partition


class DyckPath(tuple):
    """A tuple of boxes in walk order (first box = tail end, last = head end)."""

    __slots__ = ()

    def __new__(cls, boxes):
        boxes = [Box(*b) for b in boxes]
        if not boxes:
            raise EmptyPath("a Dyck path needs at least one box")
        return super().__new__(cls, boxes)

    @property
    def start(self):
        return self[0]

    @property
    def end(self):
        return self[-1]

    @property
    def level(self):
        return self[0].level

    def transpose(self):
        # transposing reverses the walk: N steps become W steps read backwards
        return DyckPath(Box(j, i) for i, j in reversed(self))


def nw_neighbors(box):
    i, j = box
    return ((i - 1, j), (i - 1, j - 1), (i, j - 1))


def shadow(boxes):
    """Every position directly N, NW or W of some box (quadrant not enforced)."""
    return {nb for b in boxes for nb in nw_neighbors(b)}


@dataclass(frozen=True)
class DyckCheck:
    valid: bool
    reason: str = ""
    level: int = 0
    length: int = 0

    def __bool__(self):
        return self.valid


def validate_dyck_path(boxes):
    boxes = [tuple(b) for b in boxes]
    if not boxes:
        raise EmptyPath("empty path")
    n = len(boxes)
    for b in boxes:
        if b[0] < 1 or b[1] < 1:
            return DyckCheck(False, f"box {b} outside the positive quadrant", length=n)
    for (i, j), (i2, j2) in zip(boxes, boxes[1:]):
        if (i2, j2) not in ((i - 1, j), (i, j + 1)):
            return DyckCheck(False, f"step {(i, j)} -> {(i2, j2)} is neither North nor East", length=n)
    d = boxes[0][0] + boxes[0][1]
    if boxes[-1][0] + boxes[-1][1] != d:
        return DyckCheck(False, "endpoints on different antidiagonals", length=n)
    for b in boxes:
        if b[0] + b[1] > d:
            return DyckCheck(False, f"box {b} lies below the antidiagonal {d}", length=n)
    return DyckCheck(True, level=d, length=n)


def covering_ok(p, q):
    """Covering condition for the ordered pair (P, Q)."""
    sh = shadow(p)
    if sh.isdisjoint(q):
        return True
    return sh <= set(p) | set(q)


def head_run(path, bullets):
    """Maximal contiguous run of bullets East of the path's last box."""
    i, j = path.end
    run = []
    while (i, j + len(run) + 1) in bullets:
        run.append(Box(i, j + len(run) + 1))
    return run


def tail_run(path, bullets):
    """Maximal contiguous run of bullets South of the path's first box."""
    i, j = path.start
    run = []
    while (i + len(run) + 1, j) in bullets:
        run.append(Box(i + len(run) + 1, j))
    return run


def _path_key(path):
    return (-path.start.row, path.start.col, tuple(path))


@dataclass(frozen=True)
class DyckPattern:
    """Paths plus bullets inside a partition.

    Identity is the partition together with the set of paths and the set of
    bullets; paths are stored in canonical order (start row descending, then
    start column ascending).
    """

    partition: Partition
    paths: tuple = ()
    bullets: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        paths = tuple(sorted((DyckPath(p) for p in self.paths), key=_path_key))
        object.__setattr__(self, "paths", paths)
        object.__setattr__(self, "bullets", frozenset(Box(*b) for b in self.bullets))

    @property
    def r(self):
        """Number of paths (bullets are not counted)."""
        return len(self.paths)

    @property
    def bullet_count(self):
        return len(self.bullets)

    @property
    def min_path_len(self):
        return min((len(p) for p in self.paths), default=0)

    @cached_property
    def path_boxes(self):
        return frozenset(b for p in self.paths for b in p)

    @cached_property
    def support(self):
        return self.path_boxes | self.bullets

    @cached_property
    def admissible(self):
        return pattern_admissible(self).ok

    @cached_property
    def quotient(self):
        return pattern_quotient(self)

    def sort_key(self):
        return (self.bullet_count, self.r, tuple(tuple(p) for p in self.paths), tuple(sorted(self.bullets)))

    def transpose(self):
        from .young import conjugate

        return DyckPattern(
            conjugate(self.partition),
            [p.transpose() for p in self.paths],
            [Box(j, i) for i, j in self.bullets],
        )

    def to_json(self, ctx=None):
        out = {}
        if ctx is not None:
            out["context"] = {"k": ctx.k, "n": ctx.n}
        out.update(
            partition=list(self.partition),
            paths=[[list(b) for b in p] for p in self.paths],
            bullets=[list(b) for b in sorted(self.bullets)],
            quotient=list(self.quotient),
            r=self.r,
            bullets_count=self.bullet_count,
        )
        return out

    @classmethod
    def from_json(cls, data):
        return cls(data["partition"], data["paths"], data["bullets"])


def bullet_cover_feasible(p):
    """True iff every bullet lies in a head or tail run of some path.

    Using the maximal runs suffices: any valid assignment of bullets to paths
    uses sub-runs of them, and the maximal runs are themselves valid.
    """
    covered = set()
    for path in p.paths:
        covered.update(head_run(path, p.bullets))
        covered.update(tail_run(path, p.bullets))
    return p.bullets <= covered


@dataclass
class AdmissibilityReport:
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def pattern_admissible(p):
    """Check the structural invariants and the three admissibility conditions.

    Violations are (condition, witness) pairs; condition is one of
    "structure", "quotient", "covering", "bullet-position".
    """
    a = p.partition
    bad = []
    seen = set()
    for path in p.paths:
        check = validate_dyck_path(path)
        if not check:
            bad.append(("structure", f"{tuple(map(tuple, path))}: {check.reason}"))
        for b in path:
            if b not in a:
                bad.append(("structure", f"path box {tuple(b)} outside the diagram"))
            if b in seen:
                bad.append(("structure", f"box {tuple(b)} used twice"))
            seen.add(b)
    for b in p.bullets:
        if b not in a:
            bad.append(("structure", f"bullet {tuple(b)} outside the diagram"))
        if b in seen:
            bad.append(("structure", f"bullet {tuple(b)} overlaps a path"))
    if not bullet_cover_feasible(p):
        bad.append(("structure", "bullets are not a union of head and tail runs"))
    if bad:
        return AdmissibilityReport(False, bad)

    if Partition.from_boxes(a.boxes() - p.support) is None:
        bad.append(("quotient", "removing the support does not leave a partition"))
    for x in p.paths:
        for y in p.paths:
            if x is not y and not covering_ok(x, y):
                bad.append(("covering", (tuple(map(tuple, x)), tuple(map(tuple, y)))))
    sh = shadow(p.path_boxes)
    for b in sorted(p.bullets):
        if b in sh:
            bad.append(("bullet-position", tuple(b)))
    return AdmissibilityReport(not bad, bad)


def pattern_quotient(p):
    """a^D = a minus the support of an admissible pattern."""
    if not pattern_admissible(p).ok:
        raise NotAdmissible(f"pattern in {p.partition} is not admissible")
    return Partition.from_boxes(p.partition.boxes() - p.support)


@lru_cache(maxsize=None)
def _paths_by_start(a, min_len):
    a = Partition(a)
    out = {}
    for start in a.boxes():
        d = start.level
        found = []

        def walk(path):
            cur = path[-1]
            if cur.level == d and len(path) >= min_len:
                found.append(DyckPath(path))
            for nb in (Box(cur.row - 1, cur.col), Box(cur.row, cur.col + 1)):
                if nb in a and nb.level <= d:
                    path.append(nb)
                    walk(path)
                    path.pop()

        walk([start])
        found.sort(key=lambda p: (len(p), tuple(p)))
        out[start] = tuple(found)
    return out


def enumerate_dyck_paths(a, min_len=1):
    """All Dyck paths inside `a` with at least `min_len` boxes."""
    by_start = _paths_by_start(Partition(a), min_len)
    starts = sorted(by_start, key=lambda b: (-b.row, b.col))
    return [p for s in starts for p in by_start[s]]


def enumerate_patterns(a, min_path_len=1, bullets=0, r=None):
    """Admissible patterns in `a`.

    min_path_len: every path has at least this many boxes.
    bullets: exact number of bullets, or None for any number (0 gives Dyck(a)).
    r: exact number of paths, or None for any.
    """
    a = Partition(a)
    return list(_enumerate(a, min_path_len, bullets, r))


@lru_cache(maxsize=4096)
def _enumerate(a, min_len, n_bullets, r):
    if n_bullets is not None and r is not None:
        return tuple(p for p in _enumerate(a, min_len, n_bullets, None) if p.r == r)
    if n_bullets is not None and n_bullets > 0:
        return tuple(p for p in _enumerate(a, min_len, None, r) if p.bullet_count == n_bullets)
    allow_bullets = n_bullets is None
    by_start = _paths_by_start(a, min_len)
    order = sorted(a.boxes(), key=lambda b: (-b.row, b.col))
    KEPT, BULLET, PATH = 0, 1, 2
    state = {}
    pending = set()  # boxes that must be a bullet or a path start
    paths = []
    ends = set()
    forbidden = set()  # shadow of all chosen paths
    bullet_set = set()
    out = []

    def rec(idx):
        if idx == len(order):
            out.append(DyckPattern(a, list(paths), bullet_set))
            return
        x = order[idx]
        south = (x.row + 1, x.col)
        south_removed = south not in a or state[south] != KEPT
        st = state.get(x)
        if st == PATH:
            if x not in pending and south_removed:
                rec(idx + 1)
            return

        west = (x.row, x.col - 1)
        if x not in pending and (west not in a or state[west] == KEPT):
            state[x] = KEPT
            rec(idx + 1)
            del state[x]

        if not south_removed:
            return

        if allow_bullets and x not in forbidden:
            y = west
            while y in a and state[y] == BULLET:
                y = (y[0], y[1] - 1)
            needs_up = x in pending or y not in ends
            north = Box(x.row - 1, x.col)
            if not needs_up or x.row > 1:
                state[x] = BULLET
                bullet_set.add(x)
                added = needs_up and north not in pending
                if added:
                    pending.add(north)
                rec(idx + 1)
                if added:
                    pending.discard(north)
                bullet_set.discard(x)
                del state[x]

        if r is not None and len(paths) >= r:
            return
        for path in by_start.get(x, ()):
            rest = path[1:]
            if any(b in state or b in pending for b in rest):
                continue
            sh = shadow(path)
            if not sh.isdisjoint(bullet_set):
                continue
            if not all(covering_ok(path, q) and covering_ok(q, path) for q in paths):
                continue
            for b in path:
                state[b] = PATH
            paths.append(path)
            ends.add(path.end)
            saved = forbidden.copy()
            forbidden.update(sh)
            rec(idx + 1)
            forbidden.clear()
            forbidden.update(saved)
            ends.discard(path.end)
            paths.pop()
            for b in path:
                del state[b]

    rec(0)
    if r is not None:
        out = [p for p in out if p.r == r]
    out.sort(key=DyckPattern.sort_key)
    return tuple(out)


def Z_set(ctx, a, p):
    """Bullet-free patterns (any path length) with |D| = p + |a| - 2 d_X."""
    a = ctx.check(a)
    r = p + a.size - 2 * ctx.dim
    if r < 0:
        return []
    return enumerate_patterns(a, 1, 0, r)


def A_set(ctx, a, q, p=None):
    """Admissible augmented patterns, paths of length >= 3, with q + |a| - d_X bullets.

    With `p` given, restrict further to p - q - d_X paths.
    """
    a = ctx.check(a)
    nb = q + a.size - ctx.dim
    if nb < 0:
        raise NegativeBulletCount(f"q={q} is below the codimension {ctx.codim(a)}")
    r = None if p is None else p - q - ctx.dim
    if r is not None and r < 0:
        return []
    return enumerate_patterns(a, 3, nb, r)


def augmented_patterns(a, min_path_len=3):
    """Dyck•(a) restricted to paths of length >= min_path_len, all bullet counts."""
    return enumerate_patterns(a, min_path_len, None, None)
