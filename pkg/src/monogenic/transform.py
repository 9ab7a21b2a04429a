"""Total transformations of {1..n} and their monogenic submonoids.

A transformation f has a least threshold t >= 0 and period p >= 1 with
f^(t+p) = f^t, and the submonoid {f^m : m >= 0} is determined up to
isomorphism by the pair (t, p). The threshold is the longest tail of the
functional digraph of f and the period is the lcm of its cycle lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm


class Transformation:
    """A total map on {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        for pos, x in enumerate(images):
            if not isinstance(x, int) or not 1 <= x <= n:
                raise ValueError(f"image {x!r} at position {pos + 1} not in 1..{n}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        # composition left to right: (i)(f*g) = ((i)f)g
        if not isinstance(other, Transformation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        return Transformation(other.images[x - 1] for x in self.images)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a transformation")
        result = Transformation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_permutation(self):
        return len(set(self.images)) == self.degree

    def __eq__(self, other):
        return isinstance(other, Transformation) and self.images == other.images

    def __hash__(self):
        return hash(("transformation", self.images))

    def __repr__(self):
        return f"Transformation({list(self.images)})"

    def __str__(self):
        return format_transformation(self)


def parse_transformation(text):
    """Parse whitespace-separated 1-based images, e.g. "2 3 1 1"."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty transformation text")
    images = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            images.append(int(tok))
        except ValueError:
            raise ValueError(f"token {pos}: {tok!r} is not an integer") from None
    n = len(images)
    for pos, x in enumerate(images, start=1):
        if not 1 <= x <= n:
            raise ValueError(f"token {pos}: image {x} out of range 1..{n}")
    return Transformation(images)


def format_transformation(f):
    return " ".join(str(x) for x in f.images)


def threshold_period(f):
    """Least (t, p) with f^(t+p) = f^t, computed from the functional digraph.

    The period is the lcm of the cycle lengths and the threshold is the
    maximum number of edges from a point to its cycle.
    """
    n = f.degree
    if n < 1:
        raise ValueError("threshold_period needs degree >= 1")
    img = f.images
    state = [0] * (n + 1)  # 0 unvisited, 1 on current walk, 2 finished
    dist = [0] * (n + 1)  # edges to reach a cycle point
    pos_on_path = [0] * (n + 1)
    period = 1
    threshold = 0
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        u = start
        while state[u] == 0:
            state[u] = 1
            pos_on_path[u] = len(path)
            path.append(u)
            u = img[u - 1]
        if state[u] == 1:
            # the walk closed a new cycle
            first = pos_on_path[u]
            period = lcm(period, len(path) - first)
            for w in path[first:]:
                dist[w] = 0
                state[w] = 2
            tail = path[:first]
        else:
            tail = path
        for w in reversed(tail):
            dist[w] = dist[img[w - 1]] + 1
            state[w] = 2
            threshold = max(threshold, dist[w])
    assert threshold <= n - 1
    return threshold, period


def threshold_period_by_powers(f):
    """Definitional (t, p) by iterating powers until one repeats.

    Slow reference used to cross-check the structural computation.
    """
    if f.degree < 1:
        raise ValueError("threshold_period_by_powers needs degree >= 1")
    seen = {}
    power = Transformation.identity(f.degree)
    m = 0
    while power.images not in seen:
        seen[power.images] = m
        power = power * f
        m += 1
    t = seen[power.images]
    return t, m - t


def monogenic_monoid_size(f):
    """Number of elements of {f^m : m >= 0}."""
    t, p = threshold_period(f)
    return t + p if t >= 1 else p


def semigroup_index_period(f):
    """Index and period of the subsemigroup {f^m : m >= 1}, i.e. (max(t,1), p)."""
    t, p = threshold_period(f)
    return max(t, 1), p


def are_isomorphic_monogenic(f, g):
    """Whether the monogenic submonoids generated by f and g are isomorphic."""
    return threshold_period(f) == threshold_period(g)


def construct_generator(degree, threshold, perm):
    """Build f of the given degree with the given threshold whose cycles are perm.

    perm must be a permutation, say of degree m, and threshold <= degree - m.
    Points 1..m carry perm, points m+1..m+threshold form a tail falling into
    the permutation one step per point, and later points are fixed. The
    result realizes exactly (threshold, order of perm).
    """
    if not isinstance(perm, Transformation):
        perm = Transformation(perm)
    if not perm.is_permutation():
        raise ValueError("cycle part must be a permutation")
    m = perm.degree
    if m < 1:
        raise ValueError("cycle part must have degree >= 1")
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    if threshold > degree - m:
        raise ValueError(
            f"threshold {threshold} too large: needs degree >= {m + threshold}, got {degree}"
        )
    images = list(perm.images)
    for i in range(m + 1, degree + 1):
        images.append(i - 1 if i <= m + threshold else i)
    return Transformation(images)


@dataclass(frozen=True)
class FunctionalDigraph:
    """Digraph on vertices 1..vertex_count with every out-degree exactly 1."""

    vertex_count: int
    edges: frozenset


def functional_digraph(f):
    return FunctionalDigraph(
        vertex_count=f.degree,
        edges=frozenset((i, f(i)) for i in range(1, f.degree + 1)),
    )


def from_digraph(d):
    """Rebuild the transformation; rejects graphs that are not functional."""
    out = {}
    for (u, v) in d.edges:
        if not (1 <= u <= d.vertex_count and 1 <= v <= d.vertex_count):
            raise ValueError(f"edge ({u}, {v}) leaves 1..{d.vertex_count}")
        if u in out:
            raise ValueError(f"vertex {u} has out-degree > 1")
        out[u] = v
    missing = [u for u in range(1, d.vertex_count + 1) if u not in out]
    if missing:
        raise ValueError(f"vertex {missing[0]} has out-degree 0")
    return Transformation(out[u] for u in range(1, d.vertex_count + 1))


def all_transformations(n):
    """Yield every transformation of degree n in lexicographic image order."""
    if n == 0:
        yield Transformation(())
        return
    images = [1] * n
    while True:
        yield Transformation(images)
        i = n - 1
        while i >= 0 and images[i] == n:
            images[i] = 1
            i -= 1
        if i < 0:
            return
        images[i] += 1
