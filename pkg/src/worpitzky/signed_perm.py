"""Signed permutations in window notation and their descent statistics.

A signed permutation on n letters is stored as its window
(sigma_1, ..., sigma_n): the absolute values form a permutation of
{1, ..., n} and each entry carries a sign.  The full action on
{-n, ..., -1, 1, ..., n} with sigma(-i) = -sigma(i) is implicit; every
statistic here reads only the window.

Descent sets come in three flavours:

* type A: positions i in [1, n-1] with sigma_i > sigma_{i+1};
* type B: type A plus position 0 when sigma_1 < 0;
* type D: type A plus position 0 when sigma_1 + sigma_2 < 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation in window (one-line) notation."""

    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n == 0:
            raise ValueError("empty window")
        seen = [False] * (n + 1)
        for pos, entry in enumerate(window, start=1):
            if entry == 0:
                raise ValueError(f"zero entry at position {pos}")
            a = abs(entry)
            if a > n:
                raise ValueError(
                    f"absolute value {a} at position {pos} out of range 1..{n}"
                )
            if seen[a]:
                raise ValueError(f"duplicate absolute value {a} at position {pos}")
            seen[a] = True

    # -- text format ----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Parse comma-separated signed integers, e.g. ``2,-1,4,-5,3``."""
        entries = []
        for pos, token in enumerate(text.split(","), start=1):
            try:
                entries.append(int(token.strip()))
            except ValueError:
                raise ValueError(f"invalid integer {token.strip()!r} at position {pos}") from None
        return cls(tuple(entries))

    def format(self) -> str:
        return ",".join(str(x) for x in self.window)

    def __str__(self) -> str:
        return self.format()

    # -- basic structure --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.window)

    def flip_first(self) -> "SignedPermutation":
        """Invert the sign of the first window entry."""
        return SignedPermutation((-self.window[0],) + self.window[1:])

    # -- descent sets ------------------------------------------------------

    def des_a_set(self) -> frozenset[int]:
        w = self.window
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def des_b_set(self) -> frozenset[int]:
        des = self.des_a_set()
        return des | {0} if self.window[0] < 0 else des

    def des_d_set(self) -> frozenset[int]:
        if self.n < 2:
            raise ValueError("type-D descents need at least two entries")
        des = self.des_a_set()
        return des | {0} if self.window[0] + self.window[1] < 0 else des

    def des_a(self) -> int:
        return len(self.des_a_set())

    def des_b(self) -> int:
        return len(self.des_b_set())

    def des_d(self) -> int:
        return len(self.des_d_set())

    # -- sign statistics ----------------------------------------------------

    def neg(self) -> int:
        """Number of negative window entries."""
        return sum(1 for x in self.window if x < 0)

    def neg2(self) -> int:
        """Number of negative entries among positions 2..n."""
        return sum(1 for x in self.window[1:] if x < 0)

    def is_in_dn(self) -> bool:
        """True when the number of negative entries is even."""
        return self.neg() % 2 == 0


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def enumerate_bn(n: int) -> Iterator[SignedPermutation]:
    """All 2^n n! signed permutations, lexicographic on (permutation, sign mask)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            window = tuple(
                -p if (mask >> i) & 1 else p for i, p in enumerate(perm)
            )
            yield SignedPermutation(window)


def enumerate_dn(n: int) -> Iterator[SignedPermutation]:
    """All 2^(n-1) n! even-signed permutations, same order as enumerate_bn."""
    if n < 2:
        raise ValueError("n must be >= 2")
    for sigma in enumerate_bn(n):
        if sigma.is_in_dn():
            yield sigma


def enumerate_sn(n: int) -> Iterator[Sequence[int]]:
    """Plain permutations of 1..n in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return itertools.permutations(range(1, n + 1))
