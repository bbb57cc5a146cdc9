"""Shared builders for the test suite: reference posets, random corpora,
and a root-list interlacing comparator independent of the library path."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence

from latchain import ExactPoly, Poset, boolean_lattice, chain_poset, truncated_boolean


def quasi_uniform_13() -> Poset:
    """A 13-element quasi-rank uniform poset that is not graded.

    Six atoms over the bottom; two towers of two rank-2 elements each;
    two rank-3 tops, each covering two rank-2 elements and one atom
    directly (the direct atom covers are the rank jumps). Rank generating
    polynomial: 1 + 6t + 4t^2 + 2t^3.
    """
    covers = [(0, a) for a in range(1, 7)]
    covers += [(2, 7), (3, 8), (4, 9), (5, 10)]
    covers += [(7, 11), (8, 11), (1, 11)]
    covers += [(9, 12), (10, 12), (6, 12)]
    return Poset(13, covers)


def rank_uniform_tower_13() -> Poset:
    """A 13-element rank uniform poset of rank 5 used as a paving host.

    Bottom 0; atoms 1..4; rank-2 elements 5..8 (one over each atom);
    rank-3 elements 9 (over 5, 6) and 10 (over 7, 8); rank-4 element 11
    (over 9, 10); rank-5 top 12.
    """
    covers = [(0, a) for a in range(1, 5)]
    covers += [(1, 5), (2, 6), (3, 7), (4, 8)]
    covers += [(5, 9), (6, 9), (7, 10), (8, 10)]
    covers += [(9, 11), (10, 11), (11, 12)]
    return Poset(13, covers)


def collapsed_tower_9() -> Poset:
    """The nine-element collapse of the tower: paving_construction(P, {7,8,9}, 11, 2).

    Elements: bottom 0; atoms 1..4; level {5, 6, 7} with 5 over 3, 6 over
    4, 7 over 1 and 2; top 8.
    """
    covers = [(0, a) for a in range(1, 5)]
    covers += [(3, 5), (4, 6), (1, 7), (2, 7)]
    covers += [(5, 8), (6, 8), (7, 8)]
    return Poset(9, covers)


def nonuniform_5() -> Poset:
    """Bottom, atoms a and b, c over a only, d over both: not rank uniform."""
    return Poset(5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4)])


def pentagon() -> Poset:
    """The five-element non-semimodular lattice (one long side, one short)."""
    return Poset(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def random_poset(rng: random.Random, n: int) -> Poset:
    """Random poset on n elements: edges i -> j (i < j) kept with probability p."""
    p = rng.uniform(0.1, 0.5)
    rels = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Poset(n, rels)


def random_bounded(rng: random.Random, n_mid: int) -> Poset:
    """Random poset with forced bottom and top around a random middle."""
    n = n_mid + 2
    rels = [(0, i) for i in range(1, n - 1)] + [(i, n - 1) for i in range(1, n - 1)]
    rels += [
        (i, j)
        for i in range(1, n - 1)
        for j in range(i + 1, n - 1)
        if rng.random() < 0.3
    ]
    if n == 2:
        rels = [(0, 1)]
    return Poset(n, rels)


def small_corpus() -> List[Poset]:
    """A deterministic mixed bag of small posets for identity tests."""
    rng = random.Random(20240817)
    out = [
        chain_poset(1),
        chain_poset(2),
        chain_poset(4),
        boolean_lattice(2),
        boolean_lattice(3),
        truncated_boolean(4, 1),
        quasi_uniform_13(),
        rank_uniform_tower_13(),
        collapsed_tower_9(),
        pentagon(),
        nonuniform_5(),
    ]
    out += [random_poset(rng, rng.randint(2, 10)) for _ in range(12)]
    return out


def bounded_corpus() -> List[Poset]:
    corpus = [p for p in small_corpus() if p.least is not None and p.greatest is not None]
    rng = random.Random(99)
    corpus += [random_bounded(rng, rng.randint(0, 5)) for _ in range(10)]
    return corpus


# -- exact interlacing comparator on known roots --------------------------------


def poly_from_roots(roots: Sequence[Fraction]) -> ExactPoly:
    out = ExactPoly((1,))
    for r in roots:
        out = out * ExactPoly((-Fraction(r), 1))
    return out


def roots_interlace(
    g_roots: Sequence[Fraction], f_roots: Sequence[Fraction]
) -> bool:
    """Direct comparison of sorted root lists, multiplicities included."""
    a = sorted((Fraction(r) for r in f_roots), reverse=True)
    b = sorted((Fraction(r) for r in g_roots), reverse=True)
    n, m = len(a), len(b)
    if not (m <= n <= m + 1):
        return False
    for k in range(m):
        if b[k] > a[k]:
            return False
        if k + 1 < n and a[k + 1] > b[k]:
            return False
    return True
