"""Composition identities behind Cayley's formula, with a tree census oracle.

All arithmetic is exact: Python integers and Fractions only.
"""
import itertools
import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from sympy.combinatorics.prufer import Prufer

from domain.entities import Composition, LabeledTree, TreeCensus
from domain.errors import DomainError, check_cap

logger = logging.getLogger(__name__)

DEFAULT_TREE_CENSUS_MAX_VERTICES = 8


def _require_positive(n: int, name: str = 'n'):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f'{name} must be a positive integer, got {n!r}')


def compositions_into(n: int, r: int) -> Iterator[Composition]:
    """Compositions of n into exactly r parts, lexicographic on parts."""
    if r < 1 or r > n:
        return
    # choose the r-1 cut points among the n-1 gaps; combinations come out
    # lexicographically and so do the resulting part tuples
    for cuts in itertools.combinations(range(1, n), r - 1):
        bounds = (0, *cuts, n)
        yield Composition(tuple(b - a for a, b in itertools.pairwise(bounds)))


def compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n: ascending r, then lexicographic."""
    _require_positive(n)
    for r in range(1, n + 1):
        yield from compositions_into(n, r)


def multinomial(n: int, parts: Composition | Iterable[int]) -> int:
    parts = tuple(parts)
    if any(k < 0 for k in parts):
        raise DomainError(f'multinomial parts must be nonnegative, got {parts}')
    if sum(parts) != n:
        raise DomainError(f'parts {parts} do not sum to {n}')
    result, remaining = 1, n
    for k in parts:
        result *= math.comb(remaining, k)
        remaining -= k
    return result


def cascade_weight(c: Composition) -> int:
    """k_1^k_2 * k_2^k_3 * ... * k_{r-1}^k_r (1 for a single part)."""
    return math.prod(a**b for a, b in itertools.pairwise(c.parts))


def identity_rhs(n: int) -> int:
    _require_positive(n)
    return (n + 1) ** (n - 1)


def identity_lhs(n: int) -> int:
    return sum(multinomial(n, c) * cascade_weight(c) for c in compositions(n))


def _remainder_term(n: int, ks: Sequence[int]) -> int:
    head = sum(ks[:-1])
    rest = n - sum(ks)
    coefficient = multinomial(n, (*ks, rest))
    weight = ks[-1] * math.prod(a**b for a, b in itertools.pairwise(ks))
    return coefficient * weight * (n - head) ** (rest - 1)


def induction_step_check(n: int, s: int) -> tuple[int, int]:
    """Split (n+1)^(n-1) into the first s layers of the identity plus a remainder.

    partial sums the compositions with at most s parts; remainder sums over
    k_1..k_s >= 1 with k_1 + ... + k_s < n. The two always add up to
    identity_rhs(n).
    """
    _require_positive(n)
    if not 1 <= s <= n:
        raise DomainError(f's must lie in 1..{n}, got {s}')
    partial = sum(
        multinomial(n, c) * cascade_weight(c)
        for r in range(1, s + 1)
        for c in compositions_into(n, r)
    )
    # k_1..k_s >= 1 with sum < n are the compositions of m < n into s parts
    remainder = sum(
        _remainder_term(n, c.parts)
        for m in range(s, n)
        for c in compositions_into(m, s)
    )
    return partial, remainder


def abel_binomial_check(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of n^(n-k-1) = sum_j C(n-k, j) j k^(j-1) (n-k)^(n-k-j-1)."""
    _require_positive(n)
    if not 1 <= k <= n - 1:
        raise DomainError(f'k must lie in 1..{n - 1}, got {k}')
    m = n - k
    lhs = Fraction(n) ** (m - 1)
    rhs = sum(
        (math.comb(m, j) * j * Fraction(k) ** (j - 1) * Fraction(m) ** (m - j - 1)
         for j in range(1, m + 1)),
        Fraction(0),
    )
    return lhs, rhs


def _forest_layer(n: int, r: int) -> int:
    return sum(
        multinomial(n, c) * math.prod(k ** (k - 1) for k in c)
        for c in compositions_into(n, r)
    )


def uncorrected_forest_sum(n: int) -> int:
    """The ordered-composition sum exactly as printed, without 1/r!."""
    _require_positive(n)
    return sum(_forest_layer(n, r) for r in range(1, n + 1))


def forest_identity_lhs(n: int) -> int:
    """Rooted forests on n labeled vertices, grouped by their number of trees.

    The r-part layer counts every forest with r trees once per ordering of
    its trees, hence the exact division by r!.
    """
    _require_positive(n)
    total = 0
    for r in range(1, n + 1):
        layer = _forest_layer(n, r)
        quotient, leftover = divmod(layer, math.factorial(r))
        assert leftover == 0, f'forest layer r={r} of n={n} is not divisible by r!'
        total += quotient
    return total


def cayley_count(m: int) -> int:
    """Labeled trees on m vertices: m^(m-2)."""
    _require_positive(m, 'm')
    return 1 if m <= 2 else m ** (m - 2)


def prufer_decode(seq: Sequence[int], m: int | None = None) -> LabeledTree:
    """Decode a Prufer sequence over {0..m-1} (m = len(seq) + 2)."""
    seq = [int(v) for v in seq]
    m = len(seq) + 2 if m is None else m
    if m < 2 or len(seq) != m - 2:
        raise DomainError(f'a Prufer sequence for {m} vertices has length {m - 2}')
    for v in seq:
        if not 0 <= v < m:
            raise DomainError(f'vertex id {v} out of range 0..{m - 1}')
    edges = Prufer.to_tree(seq)
    return LabeledTree(vertex_count=m, edges=frozenset((int(u), int(v)) for u, v in edges))


def prufer_encode(tree: LabeledTree) -> list[int]:
    """Strip the smallest leaf until two vertices remain."""
    if tree.vertex_count < 2:
        raise DomainError('Prufer sequences need at least two vertices')
    # to_prufer consumes the edge list it is given
    edges = [list(edge) for edge in sorted(tree.edges)]
    return [int(v) for v in Prufer.to_prufer(edges, tree.vertex_count)]


def level_profile(tree: LabeledTree) -> Composition:
    """Level sizes (|V_1|, ..., |V_r|) counted from the root."""
    depth = tree.bfs_levels()
    sizes = Counter(d for d in depth.values() if d > 0)
    return Composition(tuple(sizes[level] for level in range(1, max(sizes) + 1)))


def tree_census(
    n: int, max_vertices: int = DEFAULT_TREE_CENSUS_MAX_VERTICES
) -> TreeCensus:
    """Decode every Prufer sequence on n+1 vertices, root at 0, count profiles."""
    _require_positive(n)
    m = n + 1
    check_cap(m, max_vertices, f'tree census on {m} vertices')
    profiles: Counter[Composition] = Counter()
    seen: set[frozenset] = set()
    for seq in itertools.product(range(m), repeat=m - 2):
        tree = prufer_decode(seq, m)
        seen.add(tree.edges)
        profiles[level_profile(tree)] += 1
    logger.debug('tree census n=%d decoded %d sequences', n, m ** (m - 2))
    return TreeCensus(
        n=n,
        total_rooted_trees=sum(profiles.values()),
        profile_counts=dict(sorted(profiles.items(), key=lambda kv: kv[0].sort_key)),
        distinct_trees=len(seen),
    )


def census_matches_identity(census: TreeCensus) -> bool:
    """Every composition of n appears with count multinomial * cascade_weight."""
    return all(
        census.profile_counts.get(c, 0) == multinomial(census.n, c) * cascade_weight(c)
        for c in compositions(census.n)
    ) and set(census.profile_counts) <= set(compositions(census.n))


__all__ = [
    'compositions',
    'compositions_into',
    'multinomial',
    'cascade_weight',
    'identity_lhs',
    'identity_rhs',
    'induction_step_check',
    'abel_binomial_check',
    'forest_identity_lhs',
    'uncorrected_forest_sum',
    'cayley_count',
    'prufer_decode',
    'prufer_encode',
    'level_profile',
    'tree_census',
    'census_matches_identity',
]
