"""Independent brute-force oracles used by the tests.

Everything here is deliberately written from first principles (matrix ranks,
exhaustive enumeration, BFS) so that it does not share code paths with the
library routines it checks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from permsing import Permutation, PermutationGroup


# ---------------------------------------------------------------------------
# linear algebra oracles

def perm_matrix_minus_identity(g: Permutation, one, zero) -> list[list]:
    """The matrix M - I of the permutation matrix M (M e_j = e_{g(j)})."""
    n = g.n
    mat = [[zero] * n for _ in range(n)]
    for j in range(1, n + 1):
        mat[g(j) - 1][j - 1] = one
    for i in range(n):
        mat[i][i] = mat[i][i] - one
    return mat


def rank_over_Q(mat: list[list[Fraction]]) -> int:
    mat = [row[:] for row in mat]
    rows, cols = len(mat), len(mat[0]) if mat else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(rows):
            if r != rank and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [x - c * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def rank_mod_p(mat: list[list[int]], p: int) -> int:
    mat = [[x % p for x in row] for row in mat]
    rows, cols = len(mat), len(mat[0]) if mat else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(rows):
            if r != rank and mat[r][col] % p:
                c = mat[r][col]
                mat[r] = [(x - c * y) % p for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def fixed_dim_rank_Q(g: Permutation) -> int:
    mat = perm_matrix_minus_identity(g, Fraction(1), Fraction(0))
    return g.n - rank_over_Q(mat)


def fixed_dim_rank_mod_p(g: Permutation, p: int) -> int:
    mat = perm_matrix_minus_identity(g, 1, 0)
    return g.n - rank_mod_p(mat, p)


# ---------------------------------------------------------------------------
# literal transcription of the five-case dimension formula; None means empty

def five_case_dim(n: int, d: int, p: int):
    wild = p != 0 and n % p == 0
    if not wild:
        return 0 if d == n - 1 else None
    e = d - n + 1
    if e % p != 0 and e >= 0:
        return -((-e) // p)
    return None


def exact_value_n2(d: int, p: int):
    """The stated exact table for n = 2, d >= 1; None means empty."""
    if p != 2:
        return -Fraction(1, 2) if d == 1 else None
    return 0 if d % 2 == 0 else None


# ---------------------------------------------------------------------------
# brute-force stratum generation: all compositions, then canonicalization

def brute_force_strata(n: int, d: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    def all_partitions(total, cap):
        if total == 0:
            yield ()
            return
        for first in range(min(cap, total), 0, -1):
            for rest in all_partitions(total - first, first):
                yield (first,) + rest

    def compositions(total, length):
        if length == 0:
            if total == 0:
                yield ()
            return
        for first in range(total + 1):
            for rest in compositions(total - first, length - 1):
                yield (first,) + rest

    shapes = set()
    for nu in all_partitions(n, n):
        for delta in compositions(d, len(nu)):
            if any((x > 0) != (v > 1) for v, x in zip(nu, delta)):
                continue
            # canonicalize: sort delta descending within runs of equal nu
            canon = []
            for _, grp in itertools.groupby(range(len(nu)), key=lambda i: nu[i]):
                idx = list(grp)
                canon.extend(sorted((delta[i] for i in idx), reverse=True))
            shapes.add((nu, tuple(canon)))
    return shapes


# ---------------------------------------------------------------------------
# Cayley-graph distance from the identity, with all transpositions as edges

def transposition_distances(n: int) -> dict[tuple[int, ...], int]:
    gens = [
        Permutation(
            tuple(
                j if k + 1 == i else (i if k + 1 == j else k + 1) for k in range(n)
            )
        )
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    start = Permutation.identity(n)
    dist = {start.images: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = g * h
                if prod.images not in dist:
                    dist[prod.images] = dist[h.images] + 1
                    nxt.append(prod)
        frontier = nxt
    return dist


# ---------------------------------------------------------------------------
# all subgroups of S_n by closing generator subsets of size <= 2
# (subgroups of S_n for n <= 5 are 2-generated; the known subgroup counts
# 1, 2, 6, 30, 156 for n = 1..5 are asserted by the callers)

def all_subgroups(n: int) -> list[PermutationGroup]:
    sym = PermutationGroup.symmetric(n)
    elements = sorted(sym.elements)
    seen: dict[frozenset, PermutationGroup] = {}
    trivial = PermutationGroup.trivial(n)
    seen[frozenset(g.images for g in trivial.elements)] = trivial
    for a in elements:
        sub = PermutationGroup.from_generators([a], n)
        seen.setdefault(frozenset(g.images for g in sub.elements), sub)
    for a, b in itertools.combinations(elements, 2):
        sub = PermutationGroup.from_generators([a, b], n)
        seen.setdefault(frozenset(g.images for g in sub.elements), sub)
    return list(seen.values())
