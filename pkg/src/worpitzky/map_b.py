"""The vector-to-signed-permutation map and the type-B identity checks.

``phi`` turns a vector over {0, +-1, ..., +-m} into a signed permutation:
positions are sorted by the alphabet order of their values, ties among
equal nonnegative values are read left to right, ties among equal negative
values right to left, and a position's sign in the output follows the sign
of its value.  The map preserves the number of negative entries.

Fibers of ``phi`` are enumerated through strictly increasing integer
chains: a vector in the fiber of sigma corresponds to a chain
1 <= b_1 < ... < b_n <= m + n - des_B(sigma) via

    b_i = |a_{|sigma_i|}| + i - #{descents j < i}

(the 0 descent counts), so the fiber size is C(n + m - des_B(sigma), n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .exactnum import QPolynomial, binom
from .eulerian import eulerian_row_a, eulerian_row_b_q
from .signed_perm import SignedPermutation
from .sigma_vectors import (
    Vector,
    check_bound,
    enumerate_vectors,
    order_key,
    total_weight_neg,
)


def phi(v: Sequence[int], m: int | None = None) -> SignedPermutation:
    """Map a vector to its signed permutation."""
    if not v:
        raise ValueError("empty vector")
    if m is not None:
        check_bound(v, m)
    # composite key realizes the tie rule in one stable pass:
    # ascending position for equal nonnegative values, descending for negatives
    order = sorted(
        range(1, len(v) + 1),
        key=lambda i: (order_key(v[i - 1]), -i if v[i - 1] < 0 else i),
    )
    window = tuple(-p if v[p - 1] < 0 else p for p in order)
    return SignedPermutation(window)


def decode_abs_chains(
    des_set: frozenset[int], n: int, m: int
) -> Iterator[tuple[int, ...]]:
    """Absolute-value sequences |a_{|sigma_1|}|..|a_{|sigma_n|}| for every
    strictly increasing chain in [1, m + n - |des_set|]."""
    top = m + n - len(des_set)
    prefix = [sum(1 for j in des_set if j < i) for i in range(1, n + 1)]
    for chain in itertools.combinations(range(1, top + 1), n):
        yield tuple(b - i + prefix[i - 1] for i, b in enumerate(chain, start=1))


def fiber_size_b(sigma: SignedPermutation, m: int) -> int:
    return binom(sigma.n + m - sigma.des_b(), sigma.n)


def fiber_enumerate_b(sigma: SignedPermutation, m: int) -> list[Vector]:
    """All vectors mapping to sigma, decoded from the chain encoding."""
    if m < 0:
        raise ValueError("m must be >= 0")
    n = sigma.n
    out = []
    for abs_vals in decode_abs_chains(sigma.des_b_set(), n, m):
        a = [0] * n
        for entry, av in zip(sigma.window, abs_vals):
            a[abs(entry) - 1] = -av if entry < 0 else av
        out.append(tuple(a))
    return out


def phi_fibers(n: int, m: int) -> dict[SignedPermutation, list[Vector]]:
    """Forward-map oracle: group the whole vector space by phi."""
    fibers: dict[SignedPermutation, list[Vector]] = {}
    for v in enumerate_vectors(n, m):
        fibers.setdefault(phi(v), []).append(v)
    return fibers


# -- identity reports -------------------------------------------------------

def _json_value(x):
    return x.to_list() if isinstance(x, QPolynomial) else x


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one verified identity, with a per-term breakdown."""

    identity: str
    n: int
    m: int  # plays the role of k for the type-A identity
    lhs: QPolynomial | int
    rhs: QPolynomial | int
    passed: bool
    extras: dict = field(default_factory=dict)
    terms: tuple = ()  # (k, binomial factor, row entry, contribution)

    def to_json_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "n": self.n,
            "m": self.m,
            "lhs": _json_value(self.lhs),
            "rhs": _json_value(self.rhs),
            "pass": self.passed,
        }
        for key, value in self.extras.items():
            d[key] = _json_value(value)
        if self.terms:
            d["terms"] = [
                {
                    "k": k,
                    "binom": c,
                    "entry": _json_value(entry),
                    "contribution": _json_value(contrib),
                }
                for k, c, entry, contrib in self.terms
            ]
        return d


@dataclass(frozen=True)
class FiberReport:
    """Closed-form size vs. forward-map oracle vs. decoded chain vectors."""

    group: str  # "B" | "D"
    sigma: SignedPermutation
    m: int
    expected_size: int
    oracle_size: int
    vectors: tuple[Vector, ...] | None
    passed: bool

    def to_json_dict(self) -> dict:
        d = {
            "type": self.group,
            "sigma": self.sigma.format(),
            "m": self.m,
            "expected": self.expected_size,
            "actual": self.oracle_size,
            "pass": self.passed,
        }
        if self.vectors is not None:
            d["vectors"] = [list(v) for v in self.vectors]
        return d


def fiber_report_b(
    sigma: SignedPermutation,
    m: int,
    include_vectors: bool = True,
    oracle: dict[SignedPermutation, list[Vector]] | None = None,
) -> FiberReport:
    """Compare the chain decoding of a fiber against the forward-map sweep."""
    decoded = fiber_enumerate_b(sigma, m)
    if oracle is None:
        swept = [v for v in enumerate_vectors(sigma.n, m) if phi(v) == sigma]
    else:
        swept = oracle.get(sigma, [])
    expected = fiber_size_b(sigma, m)
    passed = (
        expected == len(swept)
        and set(decoded) == set(swept)
        and len(decoded) == len(swept)
    )
    return FiberReport(
        "B",
        sigma,
        m,
        expected,
        len(swept),
        tuple(decoded) if include_vectors else None,
        passed,
    )


# -- identity verification --------------------------------------------------

def rhs_eulerian_sum(row_entries: Sequence, n: int, m: int):
    """sum_k C(n+m-k, n) * entries[k], with the per-term breakdown."""
    terms = []
    rhs = None
    for k, entry in enumerate(row_entries):
        c = binom(n + m - k, n)
        contribution = c * entry
        terms.append((k, c, entry, contribution))
        rhs = contribution if rhs is None else rhs + contribution
    return rhs, tuple(terms)


def verify_worpitzky_a(n: int, k: int) -> IdentityReport:
    """(k+1)^n against the type-A Eulerian expansion in the binomial basis."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    lhs = (k + 1) ** n
    rhs, terms = rhs_eulerian_sum(eulerian_row_a(n).at_q1(), n, k)
    return IdentityReport("worpitzky-a", n, k, lhs, rhs, lhs == rhs, terms=terms)


def verify_worpitzky_b(n: int, m: int, jobs: int = 1) -> IdentityReport:
    """Three-way check of the type-B q-identity.

    The closed form (1 + (1+q)m)^n, the Eulerian sum
    sum_k C(n+m-k, n) B_{n,k}(q), and the brute-force vector weight
    sum_v q^neg(v) must agree as exact polynomials.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    lhs = QPolynomial((1 + m, m)) ** n
    rhs, terms = rhs_eulerian_sum(eulerian_row_b_q(n).entries, n, m)
    brute = total_weight_neg(n, m, jobs=jobs)
    passed = lhs == rhs == brute
    return IdentityReport(
        "worpitzky-b", n, m, lhs, rhs, passed, extras={"brute": brute}, terms=terms
    )
