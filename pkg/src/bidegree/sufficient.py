"""Constant-time sufficient certificates for graphicality.

Each check either certifies graphicality or reports INCONCLUSIVE, never
NOT_GRAPHIC.  Most consume only the summary statistics of a sequence
(node count ``n``, degree sum ``S``, minimum ``m``, maxima
``Ma``/``Mb``/``M``); the equal-vector check also needs a pairing flag
and the heavy-tail check a sorted prefix profile, both available
precomputed through :class:`Prepared`.  The conditions, by the CLI code
used to select them:

======  ========================  =======================================
code    certifies                 condition
======  ========================  =======================================
thm2    graphic with loops        a == b elementwise and
                                  floor((m+M)^2 / 4) <= m*n
thm3    graphic with loops        Ma * Mb <= S + 1
thm4    graphic (no loops)        (Ma + 1) * Mb <= S
thm5    graphic with loops        M <= min(floor((S - n*m)/k) + m, n)
                                  for k = ceil(m + sqrt(m^2 + S - 2*m*n))
thm6    graphic (no loops)        same with offset m+1 and cap n-1
cor2    graphic with loops        M <= k and M*k <= S for some integer k
cor3    graphic (no loops)        M < k and M*k <= S for some integer k
cor5    graphic with loops        thm5 after setting aside the R largest
                                  in-degrees (a light heavy tail)
======  ========================  =======================================

All square roots are exact integer square roots; ``ceil(m + sqrt(D))`` is
computed as ``m + isqrt(D)`` plus one unless ``D`` is a perfect square,
so boundary cases never depend on floating point.

A certificate that applies without loops also applies with loops (a
zero-diagonal realization is a realization), which is how the dispatch in
:func:`certify` mixes the two families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from math import isqrt
from typing import Optional

from .core import BidegreeSequence, SequenceStats, stats
from .errors import Infeasible, InvalidStats
from .exact import (
    INCONCLUSIVE,
    CheckOutcome,
    Verdict,
    check_no_loops,
    check_with_loops,
)

__all__ = [
    "Condition",
    "Certificate",
    "BoundTable",
    "Prepared",
    "prepare",
    "kstar_with_loops",
    "kstar_no_loops",
    "check_thm2",
    "check_thm3",
    "check_thm4",
    "check_thm5",
    "check_thm6",
    "check_cor2",
    "check_cor3",
    "check_cor5",
    "thm3_special_max",
    "thm4_special_max",
    "minimizer_b_star",
    "bound_table",
    "certify",
]


class Condition(enum.Enum):
    """Certifying conditions; values are the CLI method codes."""

    ZZ = "thm2"
    MAX_PRODUCT_LOOPS = "thm3"
    MAX_PRODUCT_NO_LOOPS = "thm4"
    MEAN_MIN_LOOPS = "thm5"
    MEAN_MIN_NO_LOOPS = "thm6"
    MULTIPLICITY_LOOPS = "cor2"
    MULTIPLICITY_NO_LOOPS = "cor3"
    HEAVY_TAIL = "cor5"

    @property
    def certifies_no_loops(self) -> bool:
        """True when the certificate guarantees a zero-diagonal realization."""
        return self in (
            Condition.MAX_PRODUCT_NO_LOOPS,
            Condition.MEAN_MIN_NO_LOOPS,
            Condition.MULTIPLICITY_NO_LOOPS,
        )


@dataclass(frozen=True)
class Certificate:
    """A fired condition plus the integers needed to re-verify it."""

    condition: Condition
    parameters: dict


@dataclass(frozen=True)
class BoundTable:
    """Largest certifiable maximum degree per condition, for fixed stats.

    ``h[J]`` is the largest ``M`` such that condition ``thmJ`` certifies a
    sequence with node count ``n``, minimum ``m``, degree sum ``total``
    and maximum degree ``M`` (side hypotheses permitting).  Keys 5 and 6
    are present only when ``m >= 1`` (and ``m <= n-1`` for 6).
    """

    n: int
    m: int
    total: int
    h: dict


class Prepared:
    """Shared precomputation for running many checks on one sequence.

    Statistics are computed eagerly; the sorted-pair machinery used by
    the heavy-tail check is built lazily on first use.
    """

    def __init__(self, seq: BidegreeSequence):
        self.seq = seq
        self.stats = stats(seq)

    @cached_property
    def pairs_equal(self) -> bool:
        """Whether every node has equal in- and out-degree."""
        return all(
            x == y for x, y in zip(self.seq.in_degrees, self.seq.out_degrees)
        )

    @cached_property
    def sorted_pairs(self) -> list:
        return sorted(
            zip(self.seq.in_degrees, self.seq.out_degrees), reverse=True
        )

    @cached_property
    def prefix_in(self) -> tuple:
        out = [0]
        out.extend(accumulate(p[0] for p in self.sorted_pairs))
        return tuple(out)

    @cached_property
    def prefix_out(self) -> tuple:
        out = [0]
        out.extend(accumulate(p[1] for p in self.sorted_pairs))
        return tuple(out)

    @cached_property
    def suffix_pair_max(self) -> tuple:
        """``suffix_pair_max[r]`` = largest degree among positions > r."""
        rev = list(
            accumulate((max(p) for p in reversed(self.sorted_pairs)), max)
        )
        rev.reverse()
        return tuple(rev)


def prepare(seq: BidegreeSequence) -> Prepared:
    return Prepared(seq)


def _ceil_isqrt(x: int) -> int:
    """Exact ceiling of sqrt(x) for x >= 0."""
    r = isqrt(x)
    return r if r * r == x else r + 1


def _graphic(condition: Condition, **parameters) -> CheckOutcome:
    return CheckOutcome(
        Verdict.GRAPHIC, certificate=Certificate(condition, parameters)
    )


def _stats_of(seq, prep: Optional[Prepared]) -> SequenceStats:
    return prep.stats if prep is not None else stats(seq)


def kstar_with_loops(n: int, S: int, m: int) -> tuple[int, bool]:
    """Smallest prefix count whose mean/min inequality binds, with loops.

    Returns ``(k, real)`` where ``k = ceil(m + sqrt(m^2 + S - 2*m*n))``
    when the discriminant is nonnegative (``real`` True), and ``(1,
    False)`` otherwise.

    Raises
    ------
    InvalidStats
        Unless ``1 <= m <= n`` and ``n*m <= S``.
    """
    if m < 1 or m > n or S < n * m:
        raise InvalidStats(f"need 1 <= m <= n and n*m <= S, got n={n} S={S} m={m}")
    disc = m * m + S - 2 * m * n
    if disc < 0:
        return 1, False
    return m + _ceil_isqrt(disc), True


def kstar_no_loops(n: int, S: int, m: int) -> tuple[int, bool]:
    """Loop-free analogue of :func:`kstar_with_loops` (offset ``m + 1``)."""
    if m < 1 or m > n - 1 or S < n * m:
        raise InvalidStats(
            f"need 1 <= m <= n-1 and n*m <= S, got n={n} S={S} m={m}"
        )
    disc = (m + 1) ** 2 + S - 2 * m * n
    if disc < 0:
        return 1, False
    return m + 1 + _ceil_isqrt(disc), True


def check_thm2(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Equal-vector min/max certificate (graphic with loops).

    Applies only when every node's in-degree equals its out-degree (an
    elementwise test; it is equivalent whether made before or after
    canonical sorting).  Certifies when ``floor((m+M)^2/4) <= m*n``.
    """
    st = _stats_of(seq, prep)
    equal = (
        prep.pairs_equal
        if prep is not None
        else all(x == y for x, y in zip(seq.in_degrees, seq.out_degrees))
    )
    if not equal:
        return INCONCLUSIVE
    m, M = st.min_degree, st.max_degree
    if (m + M) ** 2 // 4 <= m * st.n:
        return _graphic(Condition.ZZ, m=m, M=M, n=st.n)
    return INCONCLUSIVE


def check_thm3(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Max-product certificate: ``Ma * Mb <= S + 1`` (graphic with loops)."""
    st = _stats_of(seq, prep)
    if st.max_in * st.max_out <= st.total + 1:
        return _graphic(
            Condition.MAX_PRODUCT_LOOPS, Ma=st.max_in, Mb=st.max_out, S=st.total
        )
    return INCONCLUSIVE


def check_thm4(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Max-product certificate ``(Ma + 1) * Mb <= S`` (graphic, no loops)."""
    st = _stats_of(seq, prep)
    if (st.max_in + 1) * st.max_out <= st.total:
        return _graphic(
            Condition.MAX_PRODUCT_NO_LOOPS,
            Ma=st.max_in,
            Mb=st.max_out,
            S=st.total,
        )
    return INCONCLUSIVE


def thm3_special_max(S: int) -> int:
    """Largest symmetric maximum degree covered by thm3: ``isqrt(S + 1)``."""
    return isqrt(S + 1)


def thm4_special_max(S: int) -> int:
    """Largest M with ``M * (M + 1) <= S``, by exact integer search."""
    M = (isqrt(4 * S + 1) - 1) // 2
    while (M + 1) * (M + 2) <= S:
        M += 1
    while M > 0 and M * (M + 1) > S:
        M -= 1
    return M


def _thm5_bound(n: int, S: int, m: int) -> tuple[int, int]:
    k, _ = kstar_with_loops(n, S, m)
    return k, min((S - n * m) // k + m, n)


def _thm6_bound(n: int, S: int, m: int) -> tuple[int, int]:
    k, _ = kstar_no_loops(n, S, m)
    return k, min((S - n * m) // k + m, n - 1)


def check_thm5(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Mean/min certificate (graphic with loops).

    Requires a positive minimum degree; certifies when the maximum degree
    is at most ``min(floor((S - n*m)/k) + m, n)``.
    """
    st = _stats_of(seq, prep)
    if st.min_degree < 1:
        return INCONCLUSIVE
    k, m_max = _thm5_bound(st.n, st.total, st.min_degree)
    if st.max_degree <= m_max:
        return _graphic(
            Condition.MEAN_MIN_LOOPS,
            k=k,
            Mmax=m_max,
            M=st.max_degree,
            m=st.min_degree,
            n=st.n,
            S=st.total,
        )
    return INCONCLUSIVE


def check_thm6(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Mean/min certificate, loop-free variant (cap ``n - 1``)."""
    st = _stats_of(seq, prep)
    if st.min_degree < 1 or st.min_degree > st.n - 1:
        return INCONCLUSIVE
    k, m_max = _thm6_bound(st.n, st.total, st.min_degree)
    if st.max_degree <= m_max:
        return _graphic(
            Condition.MEAN_MIN_NO_LOOPS,
            k=k,
            Mmax=m_max,
            M=st.max_degree,
            m=st.min_degree,
            n=st.n,
            S=st.total,
        )
    return INCONCLUSIVE


def check_cor2(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Multiplicity certificate (graphic with loops).

    Certifies when some integer ``k`` has ``M <= k`` and ``M*k <= S``;
    the best candidate is ``k = floor(S / M)``, so the test reduces to
    ``M**2 <= S``.  Requires ``M < n``.
    """
    st = _stats_of(seq, prep)
    M = st.max_degree
    if M >= st.n:
        return INCONCLUSIVE
    if M == 0:
        return _graphic(Condition.MULTIPLICITY_LOOPS, k=st.n, M=0, S=st.total)
    k = st.total // M
    if M <= k:
        return _graphic(Condition.MULTIPLICITY_LOOPS, k=k, M=M, S=st.total)
    return INCONCLUSIVE


def check_cor3(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Strict multiplicity certificate (graphic, no loops): ``M < k``."""
    st = _stats_of(seq, prep)
    M = st.max_degree
    if M >= st.n:
        return INCONCLUSIVE
    if M == 0:
        return _graphic(
            Condition.MULTIPLICITY_NO_LOOPS, k=st.n, M=0, S=st.total
        )
    k = st.total // M
    if M < k:
        return _graphic(Condition.MULTIPLICITY_NO_LOOPS, k=k, M=M, S=st.total)
    return INCONCLUSIVE


def check_cor5(seq: BidegreeSequence, prep: Optional[Prepared] = None) -> CheckOutcome:
    """Heavy-tail certificate (graphic with loops).

    Scans exception-set sizes ``R = 0, 1, 2, ...`` over the nodes of
    largest in-degree.  With ``P`` the in-degree mass of the set, the scan
    continues while ``P < n*m`` and ``m*(n - R - 1) >= P``; a given ``R``
    certifies when the out-degree mass of the set is also at most ``P``,
    the remaining maximum degree fits the adjusted mean/min bound, and
    ``k <= M`` or ``k*m <= m*(n - R) - P``.  ``R = 0`` coincides with the
    thm5 test.
    """
    if prep is None:
        prep = Prepared(seq)
    st = prep.stats
    n, S, m = st.n, st.total, st.min_degree
    if m < 1:
        return INCONCLUSIVE
    prefix_in = prep.prefix_in
    prefix_out = prep.prefix_out
    suffix_max = prep.suffix_pair_max
    for R in range(n):
        P = prefix_in[R]
        if P >= n * m or m * (n - R - 1) < P:
            break
        if prefix_out[R] > P:
            continue
        M_rest = suffix_max[R]
        disc = m * m + S - 2 * m * n + R * m
        k = 1 if disc < 0 else m + _ceil_isqrt(disc)
        m_max = min((S - n * m - P + R * m) // k + m, n)
        if M_rest <= m_max and (k <= M_rest or k * m <= m * (n - R) - P):
            return _graphic(
                Condition.HEAVY_TAIL,
                R=R,
                P=P,
                k=k,
                Mmax=m_max,
                M=M_rest,
                m=m,
                n=n,
                S=S,
            )
    return INCONCLUSIVE


def minimizer_b_star(n: int, S: int, M: int, m: int = 0) -> tuple:
    """Out-degree vector minimizing every conjugate sum for given stats.

    The unique shape with ``k`` leading entries ``M``, one remainder in
    ``[m..M]``, and trailing entries ``m``, summing to ``S``.  Among all
    vectors over ``n`` slots with entries in ``[m..M]`` and sum ``S``,
    this one has the pointwise-smallest conjugate cumulative profile.

    Raises
    ------
    Infeasible
        Unless ``0 <= m <= M <= n`` and ``n*m <= S <= n*M``.
    """
    if not (0 <= m <= M <= n) or not (n * m <= S <= n * M):
        raise Infeasible(
            f"no vector over n={n} slots with min={m} max={M} sum={S}"
        )
    if M == m:
        return (M,) * n
    k = (S - n * m) // (M - m)
    if k >= n:
        return (M,) * n
    r = S - k * M - (n - k - 1) * m
    return (M,) * k + (r,) + (m,) * (n - k - 1)


def bound_table(n: int, m: int, S: int) -> BoundTable:
    """Largest certifiable maximum degree per condition.

    Entries 2, 3, 4 are exact thresholds (the condition holds at ``h[J]``
    and fails at ``h[J] + 1``, barring the ``n`` cap); entries 5 and 6 are
    the explicit bound formulas and appear only when their minimum-degree
    hypotheses hold.

    Raises
    ------
    InvalidStats
        Unless ``n >= 1``, ``0 <= m <= n`` and ``n*m <= S <= n*n``.
    """
    if n < 1 or m < 0 or m > n or S < n * m or S > n * n:
        raise InvalidStats(f"inconsistent stats n={n} m={m} S={S}")
    h: dict = {}

    M = max(isqrt(4 * m * n + 3) - m, 0)
    while (m + M + 1) ** 2 // 4 <= m * n:
        M += 1
    while M > 0 and (m + M) ** 2 // 4 > m * n:
        M -= 1
    h[2] = min(M, n)

    h[3] = min(thm3_special_max(S), n)
    h[4] = min(thm4_special_max(S), n)
    if m >= 1:
        h[5] = _thm5_bound(n, S, m)[1]
        if m <= n - 1:
            h[6] = _thm6_bound(n, S, m)[1]
    return BoundTable(n=n, m=m, total=S, h=h)


_LOOPS_LADDER = (
    check_thm3,
    check_thm4,
    check_cor2,
    check_cor3,
    check_thm5,
    check_thm6,
    check_cor5,
    check_thm2,
)
_NO_LOOPS_LADDER = (check_thm4, check_cor3, check_thm6)


def certify(
    seq: BidegreeSequence,
    allow_loops: bool = True,
    fallback_exact: bool = False,
) -> CheckOutcome:
    """Run the applicable certificates cheapest-first.

    Returns the first GRAPHIC outcome with its certificate.  When every
    certificate is inconclusive, falls back to the exact check if
    requested (the only way this function can return NOT_GRAPHIC);
    otherwise returns INCONCLUSIVE.
    """
    prep = Prepared(seq)
    ladder = _LOOPS_LADDER if allow_loops else _NO_LOOPS_LADDER
    for check in ladder:
        outcome = check(seq, prep)
        if outcome.verdict is Verdict.GRAPHIC:
            return outcome
    if fallback_exact:
        return check_with_loops(seq) if allow_loops else check_no_loops(seq)
    return INCONCLUSIVE
