"""The partial map onto even-signed permutations and the type-D identities.

``psi`` runs the type-B map first and then repairs sign parity: a vector
containing a zero and an odd number of negative entries has the sign of
the first output entry flipped (the first zero is read as negative).
Vectors that cannot be associated with an even-signed permutation without
breaking the descent condition are "missing" and fall into four classes:

* case1:  no zero, odd number of negative entries;
* case2a: zero present, odd negatives, flip fails, and the zero sits to
          the right of the second-smallest value (|sigma_1| > |sigma_2|);
* case2b: zero present, odd negatives, flip fails, zero to the left of the
          second-smallest value, which is negative (|sigma_1| < |sigma_2|,
          sigma_2 < 0);
* case3:  zero present, even negatives, but position 0 is a descent.

The census of missing vectors carries exact closed forms for the case
counts and for the total q-weight, plus "printed" variants of the per-case
q-expressions whose sum (but not each summand) matches the census; the
deviating closed form of the full q-identity is kept as an erratum probe.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from multiprocessing import Pool

from .bernoulli import power_sum, worpitzky_d_lhs
from .exactnum import ONE_PLUS_Q, QPolynomial, binom
from .eulerian import eulerian_row_d_q
from .map_b import FiberReport, IdentityReport, decode_abs_chains, phi, rhs_eulerian_sum
from .signed_perm import SignedPermutation
from .sigma_vectors import (
    Vector,
    check_bound,
    enumerate_vectors,
    letters,
    neg2_vec,
    neg_vec,
    total_weight_neg2,
)

MISSING_CASES = ("case1", "case2a", "case2b", "case3")


@dataclass(frozen=True)
class MapOutcome:
    """Either an associated even-signed permutation or a missing-case label."""

    sigma: SignedPermutation | None
    flipped: bool = False
    missing_case: str | None = None

    @property
    def is_associated(self) -> bool:
        return self.sigma is not None

    @classmethod
    def associate(cls, sigma: SignedPermutation, flipped: bool = False) -> "MapOutcome":
        return cls(sigma, flipped, None)

    @classmethod
    def missing(cls, case: str) -> "MapOutcome":
        if case not in MISSING_CASES:
            raise ValueError(f"unknown missing case {case!r}")
        return cls(None, False, case)

    def __str__(self) -> str:
        if self.sigma is None:
            return f"missing: {self.missing_case}"
        return self.sigma.format() + (" (flipped)" if self.flipped else "")


def psi(v, m: int | None = None) -> MapOutcome:
    """Associate a vector with an even-signed permutation, or classify it."""
    if len(v) < 2:
        raise ValueError("need vectors of length >= 2")
    if m is not None:
        check_bound(v, m)
    sigma = phi(v)
    has_zero = 0 in v
    parity_even = neg_vec(v) % 2 == 0

    if not has_zero:
        if parity_even:
            return MapOutcome.associate(sigma)
        return MapOutcome.missing("case1")

    if parity_even:
        if 0 in sigma.des_d_set():
            assert tuple(v).count(0) <= 1
            return MapOutcome.missing("case3")
        return MapOutcome.associate(sigma)

    flipped = sigma.flip_first()
    if 0 in flipped.des_d_set():
        assert tuple(v).count(0) <= 1
        w = sigma.window
        if abs(w[0]) > abs(w[1]):
            return MapOutcome.missing("case2a")
        assert flipped.window[1] < 0
        return MapOutcome.missing("case2b")
    return MapOutcome.associate(flipped, flipped=True)


# -- fibers -----------------------------------------------------------------

def fiber_size_d(sigma: SignedPermutation, m: int) -> int:
    return binom(sigma.n + m - sigma.des_d(), sigma.n)


def fiber_enumerate_d(sigma: SignedPermutation, m: int) -> list[Vector]:
    """All vectors associated with sigma, decoded from the chain encoding.

    Signs are recovered from sigma except at the first chain position,
    where a zero absolute value stays zero even for a negative first entry
    (the zero is the one read as negative by the parity flip).  Every
    decoded vector is validated by a forward map call; a mismatch is a
    hard failure, never a silent skip.
    """
    if not sigma.is_in_dn():
        raise ValueError("sigma must have an even number of negative entries")
    if m < 0:
        raise ValueError("m must be >= 0")
    n = sigma.n
    out = []
    for abs_vals in decode_abs_chains(sigma.des_d_set(), n, m):
        a = [0] * n
        # a negated zero stays zero: the first chain position may decode to 0
        # under a negative first entry, all later positions are nonzero there
        for entry, av in zip(sigma.window, abs_vals):
            a[abs(entry) - 1] = -av if entry < 0 else av
        v = tuple(a)
        outcome = psi(v, m)
        if outcome.sigma != sigma:
            raise ArithmeticError(
                f"decoded vector {v} does not map back to {sigma} (got {outcome})"
            )
        out.append(v)
    return out


def psi_fibers(n: int, m: int):
    """Forward-map oracle: fibers of associated sigmas plus missing vectors."""
    fibers: dict[SignedPermutation, list[Vector]] = {}
    missing: dict[str, list[Vector]] = {case: [] for case in MISSING_CASES}
    for v in enumerate_vectors(n, m):
        outcome = psi(v)
        if outcome.is_associated:
            fibers.setdefault(outcome.sigma, []).append(v)
        else:
            missing[outcome.missing_case].append(v)
    return fibers, missing


def fiber_report_d(
    sigma: SignedPermutation,
    m: int,
    include_vectors: bool = True,
    oracle: dict[SignedPermutation, list[Vector]] | None = None,
) -> FiberReport:
    decoded = fiber_enumerate_d(sigma, m)
    if oracle is None:
        swept = [
            v for v in enumerate_vectors(sigma.n, m) if psi(v).sigma == sigma
        ]
    else:
        swept = oracle.get(sigma, [])
    expected = fiber_size_d(sigma, m)
    passed = expected == len(swept) and set(decoded) == set(swept)
    return FiberReport(
        "D",
        sigma,
        m,
        expected,
        len(swept),
        tuple(decoded) if include_vectors else None,
        passed,
    )


# -- missing-vector census ----------------------------------------------------

def missing_case1_closed(n: int, m: int) -> int:
    """Half the vectors without zeros: 2^(n-1) m^n."""
    return 2 ** (n - 1) * m ** n


def missing_case2a_closed(n: int, m: int) -> int:
    """Closed form for the zero-right-of-second-smallest class."""
    total = sum(
        (2 * j + 2) ** n - 2 * (2 * j + 1) ** n + (2 * j) ** n for j in range(m)
    )
    half, rem = divmod(total, 2)
    if rem:
        raise ArithmeticError(f"odd case2a sum {total} at n={n}, m={m}")
    return half


def missing_cases2b3_closed(n: int, m: int) -> int:
    """Closed form for the two zero-left-of-second-smallest classes together."""
    return sum(
        n * (2 * j + 2) ** (n - 1) - (2 * j + 2) ** n + (2 * j + 1) ** n
        for j in range(m)
    )


def missing_total_closed(n: int, m: int) -> int:
    return 2 ** (n - 1) * sum((j + 1) ** (n - 1) for j in range(m)) * n


def missing_weight_closed(n: int, m: int) -> QPolynomial:
    """(1+q)^(n-1) * n * sum_{j=1}^{m} j^(n-1)."""
    return ONE_PLUS_Q ** (n - 1) * power_sum(n, m)


@dataclass(frozen=True)
class MissingCensus:
    """Per-case counts and q-weights of missing vectors vs. closed forms."""

    n: int
    m: int
    counts: dict[str, int]
    weights: dict[str, QPolynomial]
    associated_count: int

    @property
    def total_count(self) -> int:
        return sum(self.counts.values())

    @property
    def total_weight(self) -> QPolynomial:
        return sum(self.weights.values(), QPolynomial.zero())

    @property
    def passed(self) -> bool:
        return (
            self.counts["case1"] == missing_case1_closed(self.n, self.m)
            and self.counts["case2a"] == missing_case2a_closed(self.n, self.m)
            and self.counts["case2b"] + self.counts["case3"]
            == missing_cases2b3_closed(self.n, self.m)
            and self.total_count == missing_total_closed(self.n, self.m)
            and self.total_weight == missing_weight_closed(self.n, self.m)
            and all(
                self.weights[c].at_q1() == self.counts[c] for c in MISSING_CASES
            )
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "cases": {
                case: {
                    "count": self.counts[case],
                    "weight": self.weights[case].to_list(),
                }
                for case in MISSING_CASES
            },
            "closed_forms": {
                "A": missing_case2a_closed(self.n, self.m),
                "B": missing_cases2b3_closed(self.n, self.m),
                "case1": missing_case1_closed(self.n, self.m),
                "total": missing_total_closed(self.n, self.m),
                "total_weight": missing_weight_closed(self.n, self.m).to_list(),
            },
            "pass": self.passed,
        }


def _census_block(args) -> tuple[dict, dict, int]:
    n, m, first = args
    counts = {case: 0 for case in MISSING_CASES}
    weight_counts = {case: [0] * (n + 1) for case in MISSING_CASES}
    associated = 0
    for rest in product(letters(m), repeat=n - 1):
        v = (first,) + rest
        outcome = psi(v)
        if outcome.is_associated:
            associated += 1
        else:
            case = outcome.missing_case
            counts[case] += 1
            weight_counts[case][neg2_vec(v)] += 1
    return counts, weight_counts, associated


def missing_census(n: int, m: int, jobs: int = 1) -> MissingCensus:
    """Classify every vector and tally the missing ones per case."""
    if n < 2:
        raise ValueError("need n >= 2")
    blocks = [(n, m, first) for first in letters(m)]
    if jobs > 1:
        with Pool(jobs) as pool:
            partials = pool.map(_census_block, blocks)
    else:
        partials = [_census_block(b) for b in blocks]
    counts = {case: 0 for case in MISSING_CASES}
    weight_counts = {case: [0] * (n + 1) for case in MISSING_CASES}
    associated = 0
    for part_counts, part_weights, part_assoc in partials:
        associated += part_assoc
        for case in MISSING_CASES:
            counts[case] += part_counts[case]
            for k, c in enumerate(part_weights[case]):
                weight_counts[case][k] += c
    weights = {case: QPolynomial(weight_counts[case]) for case in MISSING_CASES}
    return MissingCensus(n, m, counts, weights, associated)


# -- printed per-case q-expressions -------------------------------------------

def printed_case_weights_q(n: int, m: int) -> tuple[QPolynomial, QPolynomial, QPolynomial]:
    """The three printed per-case q-expressions, evaluated verbatim.

    Only their SUM is guaranteed to equal the census total weight; the
    individual values are known to deviate from the direct per-case
    weighting (e.g. n=2, m=1: printed case1 is 1+q, the census gives 2).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    one_plus_q = ONE_PLUS_Q

    case1 = one_plus_q ** (n - 1) * m ** n

    case2a = QPolynomial.zero()
    for j in range(1, m + 1):
        for i in range(1, n):
            bulk = (m - j + 1) ** (n - i) - (m - j) ** (n - i)
            for k in range(i):
                case2a = case2a + (
                    one_plus_q ** (n - k - 2)
                    * (bulk * binom(i - 1, k) * (m - j) ** (i - 1 - k))
                )

    cases2b3 = QPolynomial.zero()
    for j in range(1, m + 1):
        for i in range(1, n):
            right = one_plus_q * (m - j)
            left = one_plus_q * (m - j + 1)
            for k in range(1, n - i + 1):
                cases2b3 = cases2b3 + (
                    (one_plus_q ** k - 1)
                    * binom(n - i, k)
                    * right ** (n - i - k)
                    * left ** (i - 1)
                )

    return case1, case2a, cases2b3


def printed_lhs_d_q(n: int, m: int) -> QPolynomial:
    """The printed closed form of the type-D q-identity's left side.

    Evaluated verbatim as (1+2m)((1+q)m)^(n-1) - (1+q)^(n-1) n sum_j j^(n-1).
    Known not to match the enumerated right side (it already fails at q=1);
    kept as a probe, see ``erratum_report_d``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    head = (1 + 2 * m) * (ONE_PLUS_Q * m) ** (n - 1)
    return head - ONE_PLUS_Q ** (n - 1) * power_sum(n, m)


# -- identity verification ----------------------------------------------------

def associated_weight_sum(n: int, m: int):
    """sum_k C(n+m-k, n) D_{n,k}(q) with the per-term breakdown."""
    return rhs_eulerian_sum(eulerian_row_d_q(n).entries, n, m)


def verify_worpitzky_d_q1(n: int, m: int) -> IdentityReport:
    """Type-D identity at q=1: both left-side routes against the Eulerian sum."""
    if n < 2 or m < 0:
        raise ValueError("need n >= 2 and m >= 0")
    lhs = worpitzky_d_lhs(n, m)
    rhs_poly, terms = associated_weight_sum(n, m)
    rhs = rhs_poly.at_q1()
    terms_q1 = tuple((k, c, e.at_q1(), p.at_q1()) for k, c, e, p in terms)
    return IdentityReport("worpitzky-d", n, m, lhs, rhs, lhs == rhs, terms=terms_q1)


def verify_balance_d_q(n: int, m: int, jobs: int = 1) -> IdentityReport:
    """Mass balance: total vector weight = associated weight + missing weight.

    The left side is the brute-force sum of q^neg2 over all vectors; the
    right side adds the Eulerian fiber sum and the missing-weight closed
    form.  This is the verified form of the type-D q-identity.
    """
    if n < 2 or m < 0:
        raise ValueError("need n >= 2 and m >= 0")
    lhs = total_weight_neg2(n, m, jobs=jobs)
    associated, terms = associated_weight_sum(n, m)
    missing = missing_weight_closed(n, m)
    rhs = associated + missing
    return IdentityReport(
        "balance-d",
        n,
        m,
        lhs,
        rhs,
        lhs == rhs,
        extras={"associated": associated, "missing": missing},
        terms=terms,
    )


def erratum_report_d(n: int, m: int) -> IdentityReport:
    """Probe the printed type-D q closed form against the enumerated side.

    Passes when the discrepancy is CONFIRMED: the printed form differs from
    the Eulerian sum, while the correct q=1 left side still matches it.
    """
    if n < 2 or m < 0:
        raise ValueError("need n >= 2 and m >= 0")
    printed = printed_lhs_d_q(n, m)
    rhs, _ = associated_weight_sum(n, m)
    correct_q1 = worpitzky_d_lhs(n, m)
    confirmed = printed != rhs and correct_q1 == rhs.at_q1()
    return IdentityReport(
        "erratum-d",
        n,
        m,
        printed,
        rhs,
        confirmed,
        extras={
            "printed_at_q1": printed.at_q1(),
            "rhs_at_q1": rhs.at_q1(),
            "correct_q1_lhs": correct_q1,
        },
    )
