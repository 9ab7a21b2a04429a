"""Partial permutations of {1..n} and their monogenic inverse submonoids.

A partial permutation decomposes {1..n} into cycles and chains (an
untouched point is a chain on one point). The inverse submonoid generated
by f and its inverse is determined up to isomorphism by the pair
(longest chain point-count, lcm of cycle lengths), with defaults (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import lcm


class PartialPerm:
    """An injective partial map on {1..n}; images[i-1] is None off the domain."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = set()
        for pos, x in enumerate(images):
            if x is None:
                continue
            if not isinstance(x, int) or not 1 <= x <= n:
                raise ValueError(f"image {x!r} at position {pos + 1} not in 1..{n}")
            if x in seen:
                raise ValueError(f"image {x} repeated at position {pos + 1}")
            seen.add(x)
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def empty(cls, n):
        return cls([None] * n)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def domain(self):
        return frozenset(i for i in range(1, self.degree + 1) if self.images[i - 1] is not None)

    def image_set(self):
        return frozenset(x for x in self.images if x is not None)

    def is_permutation(self):
        return None not in self.images

    def __mul__(self, other):
        # composition left to right: (i)(f*g) = ((i)f)g where both are defined
        if not isinstance(other, PartialPerm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        return PartialPerm(
            None if x is None else other.images[x - 1] for x in self.images
        )

    def inverse(self):
        out = [None] * self.degree
        for i, x in enumerate(self.images, start=1):
            if x is not None:
                out[x - 1] = i
        return PartialPerm(out)

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = PartialPerm.identity(self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, PartialPerm) and self.images == other.images

    def __hash__(self):
        return hash(("partial_perm", self.images))

    def __repr__(self):
        return f"PartialPerm({list(self.images)})"

    def __str__(self):
        return format_partial_perm(self)


def parse_partial_perm(text):
    """Parse images with "-" for undefined, e.g. "2 - 4 5 3"."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty partial permutation text")
    images = []
    for pos, tok in enumerate(tokens, start=1):
        if tok == "-":
            images.append(None)
            continue
        try:
            images.append(int(tok))
        except ValueError:
            raise ValueError(f"token {pos}: {tok!r} is not an integer or '-'") from None
    n = len(images)
    seen = set()
    for pos, x in enumerate(images, start=1):
        if x is None:
            continue
        if not 1 <= x <= n:
            raise ValueError(f"token {pos}: image {x} out of range 1..{n}")
        if x in seen:
            raise ValueError(f"token {pos}: image {x} repeated")
        seen.add(x)
    return PartialPerm(images)


def format_partial_perm(f):
    return " ".join("-" if x is None else str(x) for x in f.images)


@dataclass(frozen=True)
class OrbitDecomposition:
    """Cycles and chains of a partial permutation, as tuples of points.

    A chain (x1, ..., xj) satisfies x1 not in the image, xj not in the
    domain, and f maps each point to the next; a single untouched point is
    the chain (x,).
    """

    cycles: tuple
    chains: tuple

    def cycle_lengths(self):
        return tuple(len(c) for c in self.cycles)

    def chain_lengths(self):
        return tuple(len(c) for c in self.chains)


def orbit_decomposition(f):
    """Split {1..n} into the cycles and chains of f."""
    n = f.degree
    in_image = f.image_set()
    placed = set()
    chains = []
    for start in range(1, n + 1):
        if start in in_image or start in placed:
            continue
        run = [start]
        placed.add(start)
        u = start
        while f(u) is not None:
            u = f(u)
            run.append(u)
            placed.add(u)
        chains.append(tuple(run))
    cycles = []
    for start in range(1, n + 1):
        if start in placed:
            continue
        run = []
        u = start
        while u not in placed:
            placed.add(u)
            run.append(u)
            u = f(u)
        assert u == start, "a non-chain point must close its own cycle"
        cycles.append(tuple(run))
    return OrbitDecomposition(cycles=tuple(cycles), chains=tuple(chains))


@dataclass(frozen=True)
class ChainCycleType:
    """Isomorphism invariant of a monogenic inverse submonoid.

    chain is the point-count of the longest chain (0 when the generator is
    a permutation), cycle is the lcm of the cycle lengths (1 when there are
    no cycles).
    """

    chain: int
    cycle: int

    def __post_init__(self):
        if self.chain < 0 or self.cycle < 1:
            raise ValueError("need chain >= 0 and cycle >= 1")


def classify(f):
    """ChainCycleType of the inverse submonoid generated by f and f^-1."""
    orbits = orbit_decomposition(f)
    a = max(orbits.chain_lengths(), default=0)
    k = lcm(*orbits.cycle_lengths()) if orbits.cycles else 1
    return ChainCycleType(chain=a, cycle=k)


def are_isomorphic_monogenic_inverse(f, g):
    return classify(f) == classify(g)


def embed_transformation_type(threshold, period):
    """Inverse-monoid type realizing a transformation type (threshold, period)."""
    return ChainCycleType(chain=threshold, cycle=period)


def canonical_generator(chain, cycle):
    """Partial permutation of degree chain+cycle with the given type.

    Points 1..chain form one chain (for chain = 1 a single untouched
    point) and points chain+1..chain+cycle form one cycle.
    """
    ctype = ChainCycleType(chain, cycle)
    n = ctype.chain + ctype.cycle
    images = [None] * n
    for i in range(1, ctype.chain):
        images[i - 1] = i + 1
    for j in range(ctype.cycle):
        images[ctype.chain + j] = ctype.chain + 1 + (j + 1) % ctype.cycle
    return PartialPerm(images)


def all_partial_perms(n):
    """Yield every partial permutation of degree n."""
    points = list(range(1, n + 1))
    for size in range(n + 1):
        for dom in combinations(points, size):
            for img in permutations(points, size):
                images = [None] * n
                for d, x in zip(dom, img):
                    images[d - 1] = x
                yield PartialPerm(images)


def _monoid_closure_size(gen):
    """Size of the inverse monoid generated by gen, by plain set closure."""
    gens = [gen, gen.inverse()]
    elems = {PartialPerm.identity(gen.degree)}
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                prod = a * g
                if prod not in elems:
                    elems.add(prod)
                    new.append(prod)
        frontier = new
    return len(elems)


def chain(j):
    """The chain on points 1..j: i -> i+1 for i < j (untouched point for j = 1)."""
    if j < 1:
        raise ValueError("need j >= 1")
    images = [None] * j
    for i in range(1, j):
        images[i - 1] = i + 1
    return PartialPerm(images)


def chain_action_agrees(j):
    """Check the chain-on-pairs action argument at chain length j >= 2.

    Let f be the chain on points 1..j, g the chain on 1..j-1, and
    X = {(1,2), ..., (j-1,j)}. The action of f by (a,a+1) -> ((a)f,(a+1)f)
    and the action of g by (b,b+1) -> ((b)g,(b)g+1) must coincide as
    partial maps on X, and g must act faithfully.
    """
    if j < 2:
        raise ValueError("need j >= 2")
    f = chain(j)
    g = chain(j - 1)
    # index the pair (a, a+1) by a = 1..j-1
    f_action = [None] * (j - 1)
    for a in range(1, j):
        fa, fa1 = f(a), f(a + 1)
        if fa is not None and fa1 is not None and fa1 == fa + 1 and fa1 <= j:
            f_action[a - 1] = fa
    g_action = [None] * (j - 1)
    for b in range(1, j):
        gb = g(b) if b <= j - 1 else None
        if gb is not None and gb + 1 <= j:
            g_action[b - 1] = gb
    if f_action != g_action:
        return False
    action = PartialPerm(g_action)
    # faithful: the action closure is as large as the monoid generated by g
    return _monoid_closure_size(g) == _monoid_closure_size(action)
