"""Eulerian numbers of types A, B, D and their q-analogues.

Every row is computed by exhaustive enumeration of the group — no
recurrence or closed form is assumed anywhere; the enumeration is the
trusted oracle.  Rows are memoized per (type, n) since the identity
checks query them repeatedly across m values.

Type A entries count permutations by descents.  Type B refines the count
of signed permutations with k type-B descents by q^neg, type D the count
of even-signed permutations with k type-D descents by q^neg2.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

from .exactnum import QPolynomial
from .signed_perm import SignedPermutation, enumerate_bn, enumerate_dn, enumerate_sn


@dataclass(frozen=True)
class EulerianRow:
    """One triangle row: entries[k] is a polynomial in q (constant for type A)."""

    group: str  # "A" | "B" | "D"
    n: int
    entries: tuple[QPolynomial, ...]

    def at_q1(self) -> tuple[int, ...]:
        return tuple(p.at_q1() for p in self.entries)

    def to_json(self) -> str:
        return json.dumps(
            {
                "type": self.group,
                "n": self.n,
                "entries": [p.to_list() for p in self.entries],
            }
        )

    def to_csv(self) -> str:
        """One row per k; columns are powers of q (header included)."""
        width = max((len(p.coeffs) for p in self.entries), default=0)
        width = max(width, 1)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k"] + [f"q^{j}" for j in range(width)])
        for k, p in enumerate(self.entries):
            row = list(p.coeffs) + [0] * (width - len(p.coeffs))
            writer.writerow([k] + row)
        return buf.getvalue()


def _tally(elements, des_of, weight_of, n: int, k_max: int) -> tuple[QPolynomial, ...]:
    counts = [[0] * (n + 1) for _ in range(k_max + 1)]
    for sigma in elements:
        counts[des_of(sigma)][weight_of(sigma)] += 1
    return tuple(QPolynomial(c) for c in counts)


@lru_cache(maxsize=None)
def eulerian_row_a(n: int) -> EulerianRow:
    """Type-A row: entries[k] = #{pi in S_n : des(pi) = k}, k in [0, n-1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = [0] * n
    for perm in enumerate_sn(n):
        des = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        counts[des] += 1
    return EulerianRow("A", n, tuple(QPolynomial((c,)) for c in counts))


@lru_cache(maxsize=None)
def eulerian_row_b_q(n: int) -> EulerianRow:
    """Type-B row: entries[k] = sum of q^neg over sigma with des_B = k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    entries = _tally(
        enumerate_bn(n),
        SignedPermutation.des_b,
        SignedPermutation.neg,
        n,
        n,
    )
    return EulerianRow("B", n, entries)


@lru_cache(maxsize=None)
def eulerian_row_d_q(n: int) -> EulerianRow:
    """Type-D row: entries[k] = sum of q^neg2 over sigma with des_D = k."""
    if n < 2:
        raise ValueError("n must be >= 2")
    entries = _tally(
        enumerate_dn(n),
        SignedPermutation.des_d,
        SignedPermutation.neg2,
        n,
        n,
    )
    return EulerianRow("D", n, entries)


def eulerian_row(group: str, n: int) -> EulerianRow:
    if group == "A":
        return eulerian_row_a(n)
    if group == "B":
        return eulerian_row_b_q(n)
    if group == "D":
        return eulerian_row_d_q(n)
    raise ValueError(f"unknown type {group!r}")
