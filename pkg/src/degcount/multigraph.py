"""Labelled multigraphs: loops, edge multiplicities, orderings weight.

Vertices are labelled 1..n.  Edges form a multiset of unordered pairs stored
canonically as a sorted-pair -> multiplicity map, so multiplicity queries are
O(1) and serialisation is deterministic.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from fractions import Fraction


class GraphClass(enum.Enum):
    """Partition of multigraphs by how tame their non-simple edges are.

    SIMPLE: no loops, no repeated edges.
    STAR: every non-simple edge is a single loop or a double edge, and no
        vertex touches two of them.
    NONSTAR: everything else (a double loop, a triple edge, a loop meeting a
        double edge, or two double edges sharing a vertex).
    """

    SIMPLE = "simple"
    STAR = "star"
    NONSTAR = "nonstar"


class Multigraph:
    """Immutable multigraph on vertices 1..n with a multiset of edges."""

    __slots__ = ("n", "_mult", "_items")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        counts = Counter()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{n}")
            counts[(u, v) if u <= v else (v, u)] += 1
        self._mult = dict(counts)
        self._items = tuple(sorted(self._mult.items()))

    @property
    def num_edges(self) -> int:
        return sum(self._mult.values())

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get((u, v) if u <= v else (v, u), 0)

    def edge_items(self):
        """Sorted ((u, v), multiplicity) pairs, u <= v."""
        return self._items

    def edge_occurrences(self):
        """Every edge occurrence as a sorted pair, repeats included."""
        for (u, v), c in self._items:
            for _ in range(c):
                yield (u, v)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside range 1..{self.n}")
        total = 0
        for (a, b), c in self._items:
            if a == v:
                total += c
            if b == v:
                total += c
        return total

    def degrees(self) -> list[int]:
        deg = [0] * (self.n + 1)
        for (a, b), c in self._items:
            deg[a] += c
            deg[b] += c
        return deg[1:]

    def is_simple(self) -> bool:
        return all(a != b and c == 1 for (a, b), c in self._items)

    def classify(self) -> GraphClass:
        """Place the multigraph in the SIMPLE / STAR / NONSTAR partition."""
        if self.is_simple():
            return GraphClass.SIMPLE
        loops = set()
        double_count = [0] * (self.n + 1)
        for (a, b), c in self._items:
            if a == b:
                if c >= 2:
                    return GraphClass.NONSTAR
                loops.add(a)
            else:
                if c >= 3:
                    return GraphClass.NONSTAR
                if c == 2:
                    double_count[a] += 1
                    double_count[b] += 1
        for v in range(1, self.n + 1):
            if double_count[v] >= 2:
                return GraphClass.NONSTAR
            if v in loops and double_count[v] >= 1:
                return GraphClass.NONSTAR
        return GraphClass.STAR

    def compensation_factor(self) -> Fraction:
        """Weight of this multigraph under the random half-edge pairing.

        1 / (prod over distinct loops of 2^mult * mult!  *  prod over
        distinct non-loop edges of mult!).  Equals 1 exactly for simple
        graphs; validated against the orderings enumerator in the tests.
        """
        denom = 1
        for (a, b), c in self._items:
            if a == b:
                denom *= (1 << c) * math.factorial(c)
            else:
                denom *= math.factorial(c)
        return Fraction(1, denom)

    # -- text form ----------------------------------------------------------

    def to_text(self) -> str:
        """Edge-list format: header "n m", then one "u v" line per occurrence."""
        lines = [f"{self.n} {self.num_edges}"]
        lines.extend(f"{u} {v}" for u, v in self.edge_occurrences())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Multigraph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty edge-list text")
        header = lines[0].split()
        if len(header) != 2:
            raise ValueError(f"bad header line {lines[0]!r}")
        n, m = int(header[0]), int(header[1])
        if len(lines) - 1 != m:
            raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls(n, edges)

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Multigraph)
                and self.n == other.n and self._items == other._items)

    def __hash__(self):
        return hash((self.n, self._items))

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={list(self.edge_occurrences())})"
