"""Vectors over the alphabet {0, +-1, ..., +-m} and their sign statistics.

The alphabet carries the linear order

    0 < -1 < 1 < -2 < 2 < ... < -m < m

(zero first, then by absolute value, negative before positive at equal
absolute value).  ``order_key`` ranks a letter in this order; all vector
statistics and the vector-to-permutation maps are driven by it.
"""

from __future__ import annotations

import itertools
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from .exactnum import QPolynomial

Vector = tuple[int, ...]


def order_key(x: int) -> int:
    """Rank of a letter: key(0)=0, key(-j)=2j-1, key(j)=2j for j >= 1."""
    return -2 * x - 1 if x < 0 else 2 * x


def neg_vec(v: Sequence[int]) -> int:
    """Number of negative entries."""
    return sum(1 for a in v if a < 0)


def neg2_vec(v: Sequence[int]) -> int:
    """Number of negative entries, excluding one occurrence of the smallest
    value in the alphabet order.

    All occurrences of the smallest value are equal, so which occurrence is
    excluded does not matter.
    """
    if not v:
        raise ValueError("empty vector")
    smallest = min(v, key=order_key)
    return neg_vec(v) - (1 if smallest < 0 else 0)


def letters(m: int) -> range:
    if m < 0:
        raise ValueError("m must be >= 0")
    return range(-m, m + 1)


def enumerate_vectors(n: int, m: int) -> Iterator[Vector]:
    """All (2m+1)^n vectors, lexicographic in the usual integer order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return itertools.product(letters(m), repeat=n)


def parse_vector(text: str, m: int | None = None) -> Vector:
    """Parse comma-separated entries, e.g. ``1,-2,0,-1,3,-2``."""
    entries = []
    for pos, token in enumerate(text.split(","), start=1):
        try:
            entries.append(int(token.strip()))
        except ValueError:
            raise ValueError(f"invalid integer {token.strip()!r} at position {pos}") from None
    v = tuple(entries)
    if m is not None:
        check_bound(v, m)
    return v


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(a) for a in v)


def check_bound(v: Sequence[int], m: int) -> None:
    for pos, a in enumerate(v, start=1):
        if abs(a) > m:
            raise ValueError(f"entry {a} at position {pos} exceeds bound m={m}")


# -- total q-weights ------------------------------------------------------

def _weight_counts(vectors: Iterable[Sequence[int]], stat, n: int) -> list[int]:
    counts = [0] * (n + 1)
    for v in vectors:
        counts[stat(v)] += 1
    return counts


def _neg_block(args) -> list[int]:
    n, m, first = args
    counts = [0] * (n + 1)
    base = 1 if first < 0 else 0
    for rest in itertools.product(letters(m), repeat=n - 1):
        counts[base + neg_vec(rest)] += 1
    return counts


def _neg2_block(args) -> list[int]:
    n, m, first = args
    counts = [0] * (n + 1)
    for rest in itertools.product(letters(m), repeat=n - 1):
        counts[neg2_vec((first,) + rest)] += 1
    return counts


def _reduce_blocks(block_fn, n: int, m: int, jobs: int) -> list[int]:
    args = [(n, m, first) for first in letters(m)]
    with Pool(jobs) as pool:
        partials = pool.map(block_fn, args)
    total = [0] * (n + 1)
    for counts in partials:  # fixed block order keeps the reduction deterministic
        for k, c in enumerate(counts):
            total[k] += c
    return total


def total_weight_neg(n: int, m: int, jobs: int = 1) -> QPolynomial:
    """Brute-force sum of q^neg(v) over all vectors of length n, bound m."""
    if jobs > 1 and n > 1:
        counts = _reduce_blocks(_neg_block, n, m, jobs)
    else:
        counts = _weight_counts(enumerate_vectors(n, m), neg_vec, n)
    return QPolynomial(counts)


def total_weight_neg2(n: int, m: int, jobs: int = 1) -> QPolynomial:
    """Brute-force sum of q^neg2(v) over all vectors of length n, bound m."""
    if jobs > 1 and n > 1:
        counts = _reduce_blocks(_neg2_block, n, m, jobs)
    else:
        counts = _weight_counts(enumerate_vectors(n, m), neg2_vec, n)
    return QPolynomial(counts)
