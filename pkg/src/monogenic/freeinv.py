"""The free inverse monoid on one generator and its finite quotients.

A word over {x, x^-1} is determined, as an element of the free inverse
monoid, by the interval of integers its exponent walk visits together
with the endpoint of the walk: FreeElement(lo, hi, end) stands for the
class of x^-a x^b x^-b x^c where a = -lo, b = hi - lo, c = end - lo.

ChainCycleMonoid(n, k) is the finite quotient presented by the relations
x^n x^-n = x^(n+1) x^-(n+1) and x^n x^-n = x^n x^-n x^k. It is isomorphic
to the inverse submonoid of I_{n+k} generated by a chain on n points
together with a k-cycle, and that concrete model is authoritative for
element identity: normal-form words x^-a x^b x^-b x^c with b = n collapse
to the same element whenever (c - a) mod k agrees, so the monoid has
1^2 + ... + n^2 + k elements while the normal-form census has
1^2 + ... + n^2 + k^2 words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pperm import PartialPerm, canonical_generator


class FreeElement:
    """Element of the monogenic free inverse monoid in interval form."""

    __slots__ = ("lo", "hi", "end")

    def __init__(self, lo, hi, end):
        if not (lo <= 0 <= hi and lo <= end <= hi):
            raise ValueError(f"invalid interval form ({lo}, {hi}, {end})")
        self.lo = lo
        self.hi = hi
        self.end = end

    @classmethod
    def identity(cls):
        return cls(0, 0, 0)

    @classmethod
    def generator(cls):
        return cls(0, 1, 1)

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return FreeElement(
            min(self.lo, self.end + other.lo),
            max(self.hi, self.end + other.hi),
            self.end + other.end,
        )

    def inverse(self):
        return FreeElement(self.lo - self.end, self.hi - self.end, -self.end)

    def is_idempotent(self):
        return self.end == 0

    def normal_triple(self):
        """Exponents (a, b, c) of the normal form x^-a x^b x^-b x^c."""
        return -self.lo, self.hi - self.lo, self.end - self.lo

    def __eq__(self, other):
        return (
            isinstance(other, FreeElement)
            and (self.lo, self.hi, self.end) == (other.lo, other.hi, other.end)
        )

    def __hash__(self):
        return hash((self.lo, self.hi, self.end))

    def __repr__(self):
        return f"FreeElement({self.lo}, {self.hi}, {self.end})"


def free_eval(word):
    """Evaluate a word over {x, X} (X meaning x^-1) in the free inverse monoid."""
    pos = lo = hi = 0
    for idx, ch in enumerate(word, start=1):
        if ch == "x":
            pos += 1
        elif ch == "X":
            pos -= 1
        else:
            raise ValueError(f"character {idx}: {ch!r} is not 'x' or 'X'")
        lo = min(lo, pos)
        hi = max(hi, pos)
    return FreeElement(lo, hi, pos)


@dataclass(frozen=True)
class NormalForm:
    """Exponent triple of a word x^-a x^b x^-b x^c."""

    a: int
    b: int
    c: int

    def __str__(self):
        return f"x^-{self.a} x^{self.b} x^-{self.b} x^{self.c}"

    def word(self):
        return "X" * self.a + "x" * self.b + "X" * self.b + "x" * self.c


class ChainCycleMonoid:
    """The finite monogenic inverse monoid with chain parameter n and cycle k."""

    def __init__(self, chain, cycle):
        if chain < 0 or cycle < 1:
            raise ValueError("need chain >= 0 and cycle >= 1")
        self.chain = chain
        self.cycle = cycle

    def __repr__(self):
        return f"ChainCycleMonoid({self.chain}, {self.cycle})"

    def reduce(self, u):
        """Normal form of a free element: (a, b, c) unchanged while b < chain,
        else (a mod k, chain, c mod k)."""
        a, b, c = u.normal_triple()
        if b < self.chain:
            return NormalForm(a, b, c)
        return NormalForm(a % self.cycle, self.chain, c % self.cycle)

    def canonical(self, nf):
        """Collapse normal forms that denote the same element.

        Words with b = chain differ only through (c - a) mod k; the
        representative keeps a = 0.
        """
        if nf.b < self.chain:
            return nf
        return NormalForm(0, self.chain, (nf.c - nf.a) % self.cycle)

    def same_element(self, nf1, nf2):
        return self.canonical(nf1) == self.canonical(nf2)

    def lift(self, nf):
        """Free element of the word x^-a x^b x^-b x^c."""
        return free_eval(nf.word())

    def multiply(self, nf1, nf2):
        return self.canonical(self.reduce(self.lift(nf1) * self.lift(nf2)))

    def elements(self):
        """All elements, one canonical normal form each."""
        out = []
        for b in range(self.chain):
            for a in range(b + 1):
                for c in range(b + 1):
                    out.append(NormalForm(a, b, c))
        for d in range(self.cycle):
            out.append(NormalForm(0, self.chain, d))
        return out

    def size(self):
        """Number of elements: 1^2 + ... + chain^2 + cycle."""
        return sum(j * j for j in range(1, self.chain + 1)) + self.cycle

    def representatives(self):
        """The normal-form word census, including duplicates at b = chain."""
        out = []
        for b in range(self.chain):
            for a in range(b + 1):
                for c in range(b + 1):
                    out.append(NormalForm(a, b, c))
        for a in range(self.cycle):
            for c in range(self.cycle):
                out.append(NormalForm(a, self.chain, c))
        return out

    def representative_count(self):
        """Number of normal-form words: 1^2 + ... + chain^2 + cycle^2."""
        return sum(j * j for j in range(1, self.chain + 1)) + self.cycle * self.cycle

    def generator(self):
        return self.canonical(self.reduce(FreeElement.generator()))

    def to_partial_perm(self, nf):
        """Evaluate the normal form at the canonical generator in I_{chain+cycle}."""
        g = canonical_generator(self.chain, self.cycle)
        word = PartialPerm.identity(g.degree)
        for e in (-nf.a, nf.b, -nf.b, nf.c):
            word = word * g ** e
        return word

    def cayley_rows(self):
        """Element labels and the full multiplication table of labels."""
        elems = self.elements()
        labels = [str(nf) for nf in elems]
        index = {self.canonical(nf): i for i, nf in enumerate(elems)}
        table = [
            [labels[index[self.multiply(u, v)]] for v in elems]
            for u in elems
        ]
        return labels, table

    def cayley_csv(self, max_degree=10):
        """Multiplication table as CSV; row and column headers are normal forms."""
        self._check_table_size(max_degree)
        labels, table = self.cayley_rows()
        lines = ["," + ",".join(f'"{s}"' for s in labels)]
        for label, row in zip(labels, table):
            lines.append(f'"{label}",' + ",".join(f'"{s}"' for s in row))
        return "\n".join(lines) + "\n"

    def cayley_json(self, max_degree=10):
        import json

        self._check_table_size(max_degree)
        labels, table = self.cayley_rows()
        return json.dumps(
            {"chain": self.chain, "cycle": self.cycle, "elements": labels, "table": table}
        )

    def _check_table_size(self, max_degree):
        if self.chain + self.cycle > max_degree:
            raise ValueError(
                f"table for chain+cycle = {self.chain + self.cycle} exceeds limit {max_degree}"
            )
