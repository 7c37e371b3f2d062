"""Brute-force reference enumeration at tiny scale.

Everything here recomputes, by direct exhaustion, quantities the rest of the
package obtains through generating functions: simple-graph counts, total
compensated multigraph weights, ordering counts and marked-multigraph sums.
Clarity beats speed throughout; hard guards refuse instances whose
enumeration would blow past roughly 1e8 primitive steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from .degree_sets import DegreeSet
from .multigraph import Multigraph


@dataclass(frozen=True)
class EnumerationLimit:
    max_vertices: int = 10
    max_edges: int = 10
    max_candidate_sets: int = 5_000_000


DEFAULT_LIMIT = EnumerationLimit()


class EnumerationLimitExceeded(ValueError):
    """The requested instance is too large for exhaustive enumeration."""


def _allowed_table(degree_set: DegreeSet, max_deg: int) -> list[bool]:
    return [d in degree_set for d in range(max_deg + 1)]


def count_simple_graphs(degree_set: DegreeSet, n: int, m: int,
                        limit: EnumerationLimit = DEFAULT_LIMIT) -> int:
    """Number of simple graphs on n labelled vertices with m edges and all
    degrees in the set, by iterating every m-subset of the possible edges."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if n > limit.max_vertices:
        raise EnumerationLimitExceeded(f"n = {n} exceeds {limit.max_vertices}")
    slots = n * (n - 1) // 2
    if m > slots:
        return 0
    if math.comb(slots, m) > limit.max_candidate_sets:
        raise EnumerationLimitExceeded(
            f"C({slots},{m}) candidate edge sets exceed the enumeration budget")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    allowed = _allowed_table(degree_set, max(n - 1, 0))
    count = 0
    deg = [0] * n
    for combo in combinations(pairs, m):
        for i in range(n):
            deg[i] = 0
        for u, v in combo:
            deg[u] += 1
            deg[v] += 1
        ok = True
        for i in range(n):
            if not allowed[deg[i]]:
                ok = False
                break
        if ok:
            count += 1
    return count


def iter_multigraphs(n: int, m: int,
                     limit: EnumerationLimit = DEFAULT_LIMIT):
    """Yield every multigraph on n labelled vertices with m edges, once each.

    Iterates multisets of the n(n+1)/2 loop-or-edge slots rather than raw
    half-edge sequences, which keeps the count polynomial at desk scale.
    """
    if n > limit.max_vertices or m > limit.max_edges:
        raise EnumerationLimitExceeded(
            f"multigraph enumeration capped at n <= {limit.max_vertices}, "
            f"m <= {limit.max_edges}")
    slots = [(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]
    if m and math.comb(len(slots) + m - 1, m) > limit.max_candidate_sets:
        raise EnumerationLimitExceeded("too many edge multisets to enumerate")
    for combo in combinations_with_replacement(slots, m):
        yield Multigraph(n, combo)


def multigraph_weight_brute(degree_set: DegreeSet, n: int, m: int,
                            limit: EnumerationLimit = DEFAULT_LIMIT) -> Fraction:
    """Sum of compensation factors of every multigraph whose degrees fit."""
    allowed = _allowed_table(degree_set, 2 * m)
    total = Fraction(0)
    for graph in iter_multigraphs(n, m, limit):
        if all(allowed[d] for d in graph.degrees()):
            total += graph.compensation_factor()
    return total


def count_orderings(graph: Multigraph,
                    limit: EnumerationLimit = DEFAULT_LIMIT) -> int:
    """Number of sequences of oriented edges realising the edge multiset.

    Materialises every (permutation, orientation) variant and deduplicates,
    so the closed-form compensation factor can be checked against it.
    """
    m = graph.num_edges
    if math.factorial(m) * (1 << m) > limit.max_candidate_sets:
        raise EnumerationLimitExceeded(f"m = {m} is too many edges to order")
    occurrences = list(graph.edge_occurrences())
    seen = set()
    for perm in permutations(occurrences):
        for mask in range(1 << m):
            seq = tuple(
                (v, u) if (mask >> idx) & 1 else (u, v)
                for idx, (u, v) in enumerate(perm))
            seen.add(seq)
    return len(seen)


def contains_forbidden_configuration(graph: Multigraph) -> bool:
    """Search for any of the four dense-defect patterns.

    A repeated loop, a triple edge, a loop meeting a double edge, or two
    double edges sharing a vertex.  Independent of Multigraph.classify, which
    checks the complementary membership conditions; the tests hold the two
    routes to exhaustive agreement.
    """
    n = graph.n
    mult = graph.multiplicity
    for v in range(1, n + 1):
        if mult(v, v) >= 2:
            return True
        for u in range(1, n + 1):
            if u == v:
                continue
            if mult(u, v) >= 3:
                return True
            if mult(v, v) >= 1 and mult(u, v) >= 2:
                return True
            for w in range(u + 1, n + 1):
                if w == v:
                    continue
                if mult(u, v) >= 2 and mult(v, w) >= 2:
                    return True
    return False


def _marking_structures(graph: Multigraph):
    loops, doubles = [], []
    for (a, b), c in graph.edge_items():
        if a == b:
            loops.append(((a, b), c))
        elif c >= 2:
            doubles.append(((a, b), c))
    return loops, doubles


def _marked_compensation(graph: Multigraph, marked: dict) -> Fraction:
    # 1 / (2^{loop occurrences} * prod mult-in-normal! * prod mult-in-marked!)
    denom = 1
    for (a, b), c in graph.edge_items():
        marked_copies = marked.get((a, b), 0)
        normal_copies = c - marked_copies
        if a == b:
            denom *= 1 << c
        denom *= math.factorial(normal_copies) * math.factorial(marked_copies)
    return Fraction(1, denom)


def marked_weight_brute(degree_set: DegreeSet, n: int, m: int, u, v,
                        classes=None,
                        limit: EnumerationLimit = DEFAULT_LIMIT) -> Fraction:
    """Evaluate the marked-multigraph weight polynomial by direct search.

    For every multigraph whose degrees fit (restricted to the given
    GraphClass values when `classes` is supplied), enumerates the valid
    markings: a marked loop takes one copy of a loop, a marked double edge
    takes two copies of a repeated edge, and all marked structures must be
    vertex-disjoint.  Accumulates marked-compensation * u^k * v^l with k the
    number of marked double edges and l the number of marked loops.
    """
    u = Fraction(u)
    v = Fraction(v)
    allowed = _allowed_table(degree_set, 2 * m)
    total = Fraction(0)
    for graph in iter_multigraphs(n, m, limit):
        if not all(allowed[d] for d in graph.degrees()):
            continue
        if classes is not None and graph.classify() not in classes:
            continue
        loops, doubles = _marking_structures(graph)
        structures = ([("loop", pair) for pair, _ in loops]
                      + [("double", pair) for pair, _ in doubles])
        for mask in range(1 << len(structures)):
            touched = set()
            marked = {}
            k = ell = 0
            ok = True
            for idx, (kind, (a, b)) in enumerate(structures):
                if not (mask >> idx) & 1:
                    continue
                verts = {a} if kind == "loop" else {a, b}
                if touched & verts:
                    ok = False
                    break
                touched |= verts
                if kind == "loop":
                    marked[(a, b)] = 1
                    ell += 1
                else:
                    marked[(a, b)] = 2
                    k += 1
            if not ok:
                continue
            total += (_marked_compensation(graph, marked)
                      * u ** k * v ** ell)
    return total
