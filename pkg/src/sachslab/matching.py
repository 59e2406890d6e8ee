"""Maximum matching in bipartite and general graphs, with violator extraction.

Everything here is deterministic: vertices are always scanned in ascending
order, so repeated runs produce identical matchings and identical witness
sets.  Violators are the certificates: a HallViolator witnesses an
unsaturated left side, a TutteViolator witnesses a missing perfect matching.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import KOutOfRange, MatchingNotMaximum, SizeLimitExceeded
from .graphs import (
    Edge,
    Graph,
    VertexSet,
    bit_count,
    component_masks,
    delete_vertices,
    iter_bits,
    mask_of,
)

SUBSET_SCAN_LIMIT = 16


@dataclass(frozen=True)
class BipartiteGraph:
    """Left part 0..n_left-1, right part 0..n_right-1, adjacency left-to-right."""

    n_left: int
    n_right: int
    adj: tuple[int, ...]  # adj[u] = bitset of right neighbours of left u

    def right_adj(self) -> tuple[int, ...]:
        out = [0] * self.n_right
        for u, row in enumerate(self.adj):
            for v in iter_bits(row):
                out[v] |= 1 << u
        return tuple(out)


@dataclass(frozen=True)
class BipartiteMatching:
    """left_match[u] = matched right vertex or -1; symmetric for right_match."""

    left_match: tuple[int, ...]
    right_match: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(1 for v in self.left_match if v >= 0)

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in enumerate(self.left_match) if v >= 0]

    def saturates_left(self) -> bool:
        return all(v >= 0 for v in self.left_match)

    def saturates_right(self) -> bool:
        return all(u >= 0 for u in self.right_match)


@dataclass(frozen=True)
class HallViolator:
    """A left-side set with |S| > |N(S)|."""

    s: VertexSet
    neighborhood: VertexSet

    @property
    def neighborhood_size(self) -> int:
        return len(self.neighborhood)

    def validate(self, b: BipartiteGraph) -> bool:
        nb = 0
        for u in self.s:
            nb |= b.adj[u]
        return nb == self.neighborhood.mask and len(self.s) > bit_count(nb)


@dataclass(frozen=True)
class TutteViolator:
    """A set S with odd(G - S) > |S| (or > |S| - k in critical uses)."""

    s: VertexSet
    odd_count: int

    def validate(self, g: Graph, k: int = 0) -> bool:
        h, _ = delete_vertices(g, self.s)
        odd = sum(1 for mask in component_masks(h) if bit_count(mask) & 1)
        return odd == self.odd_count and odd > len(self.s) - k


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of the host graph."""

    pairs: tuple[Edge, ...]
    host: Graph

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covered(self) -> VertexSet:
        return VertexSet(mask_of(v for e in self.pairs for v in e), self.host.n)

    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == self.host.n

    def validate(self) -> bool:
        seen = 0
        for e in self.pairs:
            if not self.host.has_edge(e.u, e.v):
                return False
            bits = (1 << e.u) | (1 << e.v)
            if seen & bits:
                return False
            seen |= bits
        return True


# ---------------------------------------------------------------------------
# bipartite matching (augmenting paths, ascending scan order)
# ---------------------------------------------------------------------------

def _kuhn(adj: tuple[int, ...] | list[int], n_left: int, n_right: int):
    match_l = [-1] * n_left
    match_r = [-1] * n_right

    def augment(u: int, seen: list[int]) -> bool:
        for v in iter_bits(adj[u] & ~seen[0]):
            seen[0] |= 1 << v
            if match_r[v] < 0 or augment(match_r[v], seen):
                match_l[u] = v
                match_r[v] = u
                return True
        return False

    for u in range(n_left):
        augment(u, [0])
    return match_l, match_r


def max_bipartite_matching(b: BipartiteGraph) -> BipartiteMatching:
    ml, mr = _kuhn(b.adj, b.n_left, b.n_right)
    return BipartiteMatching(tuple(ml), tuple(mr))


def hall_violator(b: BipartiteGraph, m: BipartiteMatching) -> HallViolator | None:
    """Witness that the left side is unsaturated, or None if it is saturated.

    S is the set of left vertices reachable by alternating paths from the
    unmatched left vertices; then N(S) consists exactly of the matched
    partners, so |S| exceeds |N(S)| by the number of unmatched roots.
    Raises MatchingNotMaximum if an augmenting path shows m is not maximum.
    """
    roots = [u for u in range(b.n_left) if m.left_match[u] < 0]
    if not roots:
        return None
    left = mask_of(roots)
    right = 0
    frontier = list(roots)
    while frontier:
        u = frontier.pop()
        for v in iter_bits(b.adj[u] & ~right):
            right |= 1 << v
            w = m.right_match[v]
            if w < 0:
                raise MatchingNotMaximum(
                    f"augmenting path reaches unmatched right vertex {v}"
                )
            if not left >> w & 1:
                left |= 1 << w
                frontier.append(w)
    return HallViolator(VertexSet(left, b.n_left), VertexSet(right, b.n_right))


# ---------------------------------------------------------------------------
# general graphs: exact maximum matching by subset dynamic programming
# ---------------------------------------------------------------------------

def _mu_table(g: Graph) -> list[int]:
    """mu[mask] = matching number of the subgraph induced by mask."""
    if g.n > SUBSET_SCAN_LIMIT:
        raise SizeLimitExceeded(f"exact matching supports n <= {SUBSET_SCAN_LIMIT}")
    adj = g.adj
    mu = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = mu[rest]  # v left unmatched
        for w in iter_bits(adj[v] & rest):
            cand = 1 + mu[rest ^ (1 << w)]
            if cand > best:
                best = cand
        mu[mask] = best
    return mu


def max_matching_general(g: Graph) -> Matching:
    """A maximum matching; reconstruction prefers the smallest feasible partner."""
    mu = _mu_table(g)
    pairs = []
    mask = g.full_mask()
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if mu[mask] == mu[rest]:
            mask = rest
            continue
        for w in iter_bits(g.adj[v] & rest):
            if 1 + mu[rest ^ (1 << w)] == mu[mask]:
                pairs.append(Edge(v, w))
                mask = rest ^ (1 << w)
                break
    return Matching(tuple(pairs), g)


def matching_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return _mu_table(g)[g.full_mask()]


def _odd_components_masked(adj: tuple[int, ...], n: int, removed: int) -> int:
    seen = removed
    odd = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= adj[u]
            grown &= ~removed
            frontier = grown & ~comp
            comp |= grown
        seen |= comp
        odd += bit_count(comp) & 1
    return odd


def find_tutte_violator(g: Graph, k: int = 0) -> TutteViolator | None:
    """Smallest S (then lexicographically least) with odd(G-S) > |S| - k.

    Only sets with |S| >= k are scanned, matching the k-critical condition.
    """
    if g.n > SUBSET_SCAN_LIMIT:
        raise SizeLimitExceeded(f"violator scan supports n <= {SUBSET_SCAN_LIMIT}")
    for size in range(max(k, 0), g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            removed = mask_of(combo)
            odd = _odd_components_masked(g.adj, g.n, removed)
            if odd > size - k:
                return TutteViolator(VertexSet(removed, g.n), odd)
    return None


def has_perfect_matching(g: Graph) -> Matching | TutteViolator:
    """Either a perfect matching or a Tutte set certifying there is none."""
    if g.n % 2 == 0:
        m = max_matching_general(g)
        if m.is_perfect():
            return m
    violator = find_tutte_violator(g, 0)
    assert violator is not None, "no perfect matching implies a violator exists"
    return violator


@dataclass(frozen=True)
class FactorCriticalityCheck:
    """Outcome of the k-factor-critical (perfect matching) definition test."""

    critical: bool
    failing_set: VertexSet | None = None
    violator: TutteViolator | None = None  # inside G - failing_set
    reason: str | None = None


def is_k_factor_critical(g: Graph, k: int) -> FactorCriticalityCheck:
    """Definition test: G - S has a perfect matching for every |S| = k."""
    if not 0 <= k < g.n:
        raise KOutOfRange(f"k={k} outside 0 <= k < n={g.n}")
    if (g.n - k) % 2:
        combo = tuple(range(k))
        h, _ = delete_vertices(g, combo)
        result = has_perfect_matching(h)
        assert isinstance(result, TutteViolator)
        return FactorCriticalityCheck(
            False, VertexSet.of(combo, g.n), result, reason="parity: n - k is odd"
        )
    for combo in itertools.combinations(range(g.n), k):
        h, _ = delete_vertices(g, combo)
        result = has_perfect_matching(h)
        if isinstance(result, TutteViolator):
            return FactorCriticalityCheck(False, VertexSet.of(combo, g.n), result)
    return FactorCriticalityCheck(True)


def satisfies_factor_critical_condition(g: Graph, k: int) -> bool:
    """Brute-force deficiency condition: odd(G-S) <= |S| - k for all |S| >= k."""
    return find_tutte_violator(g, k) is None
