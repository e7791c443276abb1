"""Seeded generators for random and adversarial bidegree sequences.

Every generator is deterministic given its parameters and seed.  The
random ones draw from SplitMix64 (Steele, Lea & Flood's published
mix-and-increment generator), pinned here so fuzz corpora are
reproducible across runs and platforms; the power-law sampler
additionally evaluates its cumulative weights in IEEE double precision,
so its byte-for-byte reproducibility is pinned to platforms with the same
libm rounding (all common ones).  Outputs always satisfy sum(a) == sum(b)
by construction.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import accumulate
from typing import Optional

from .core import BidegreeSequence, new_sequence
from .errors import BadExponent, Infeasible, InvalidParameters
from .sufficient import minimizer_b_star

__all__ = [
    "SplitMix64",
    "GeneratorSpec",
    "generate_sequence",
    "gen_uniform",
    "gen_powerlaw",
    "gen_counterexample1",
    "gen_extremal",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG: 64-bit state, published mixing constants.

    Chosen for its tiny, exactly specified integer algorithm; any
    implementation with the same seed produces the same stream.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Unbiased uniform integer in [0, bound), by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // bound) * bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randbelow(hi - lo + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def gen_uniform(
    n: int, total: int, min_degree: int, max_degree: int, seed: int
) -> BidegreeSequence:
    """Random sequence with the given sum and entry bounds.

    Both vectors start at the minimum everywhere and receive unit
    increments at uniformly random slots below the maximum until the sum
    is reached; the realized min may exceed ``min_degree`` and the
    realized max may fall below ``max_degree``.

    Raises
    ------
    Infeasible
        Unless ``0 <= min <= max <= n`` and ``n*min <= total <= n*max``.
    """
    m, M = min_degree, max_degree
    if not (0 <= m <= M <= n) or not (n * m <= total <= n * M):
        raise Infeasible(
            f"no vector over n={n} slots with min={m} max={M} sum={total}"
        )
    rng = SplitMix64(seed)

    def vector():
        vec = [m] * n
        remaining = total - n * m
        while remaining:
            i = rng.randbelow(n)
            if vec[i] < M:
                vec[i] += 1
                remaining -= 1
        return vec

    return new_sequence(vector(), vector())


def gen_powerlaw(n: int, exponent: float, seed: int) -> BidegreeSequence:
    """Heavy-tailed sequence: degrees i.i.d. with P(d = x) ~ x**-exponent.

    Degrees are drawn on [1..n] by inverse transform on the truncated
    discrete distribution, independently for both vectors; the
    smaller-sum vector is then topped up by unit increments at uniformly
    random slots (capped at n) until the sums match.

    Raises
    ------
    BadExponent
        If ``exponent <= 2`` (the mean must be finite).
    InvalidParameters
        If ``n < 2``.
    """
    if exponent <= 2:
        raise BadExponent(f"exponent must exceed 2, got {exponent}")
    if n < 2:
        raise InvalidParameters("power-law generation needs n >= 2")
    rng = SplitMix64(seed)
    cum = list(accumulate(x ** -exponent for x in range(1, n + 1)))
    total_weight = cum[-1]

    def draw():
        u = rng.random() * total_weight
        return min(bisect_right(cum, u) + 1, n)

    a = [draw() for _ in range(n)]
    b = [draw() for _ in range(n)]
    lo, hi = (a, b) if sum(a) < sum(b) else (b, a)
    deficit = sum(hi) - sum(lo)
    while deficit:
        i = rng.randbelow(n)
        if lo[i] < n:
            lo[i] += 1
            deficit -= 1
    return new_sequence(a, b)


def gen_counterexample1(
    max_in: int, max_out: int, n: Optional[int] = None
) -> BidegreeSequence:
    """Adversarial sequence sitting just past the max-product bound.

    With ``Ma = max_in`` and ``Mb = max_out``, the output has degree sum
    ``S = Ma*Mb - 2`` (so ``Ma*Mb = S + 2``), out-degrees ``Mb`` repeated
    ``Ma - 1`` times then ``Mb - 2``, and in-degrees ``Ma`` repeated
    ``Mb - 1`` times with the leftover mass (``Ma - 2``, when positive)
    in one extra entry.  It is never graphic with loops: the first
    ``Mb - 1`` in-degrees demand one more unit than the out-degrees can
    supply.  ``n`` defaults to the minimal feasible ``max(Ma, Mb)``.

    Raises
    ------
    InvalidParameters
        Unless ``Ma >= 2``, ``Mb > 2``, and ``n >= max(Ma, Mb)``.
    """
    if max_in < 2 or max_out <= 2:
        raise InvalidParameters(
            f"need max_in >= 2 and max_out > 2, got {max_in}, {max_out}"
        )
    n_min = max(max_in, max_out)
    if n is None:
        n = n_min
    if n < n_min:
        raise InvalidParameters(f"n={n} too small; need at least {n_min}")
    a = [max_in] * (max_out - 1)
    if max_in > 2:
        a.append(max_in - 2)
    b = [max_out] * (max_in - 1) + [max_out - 2]
    a += [0] * (n - len(a))
    b += [0] * (n - len(b))
    return new_sequence(a, b)


def gen_extremal(n: int, total: int, max_degree: int) -> BidegreeSequence:
    """Tight-frontier graphic sequence for the max-product bound.

    Both vectors take the conjugate-minimizing shape (leading entries at
    the maximum, one remainder, zeros): the hardest sum profile that the
    product condition ``M*M <= S + 1`` still certifies.

    Raises
    ------
    Infeasible
        Unless ``max_degree <= n``, ``total <= n*max_degree`` and
        ``max_degree**2 <= total + 1``.
    """
    if max_degree * max_degree > total + 1:
        raise Infeasible(
            f"max={max_degree} exceeds the certifiable frontier for sum={total}"
        )
    vec = minimizer_b_star(n, total, max_degree, 0)
    return new_sequence(vec, vec)


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative description of one generator invocation."""

    kind: str  # uniform | powerlaw | counterexample1 | extremal
    n: Optional[int] = None
    seed: int = 0
    total: Optional[int] = None
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    exponent: Optional[float] = None
    max_in: Optional[int] = None
    max_out: Optional[int] = None

    def __post_init__(self):
        if self.kind not in {"uniform", "powerlaw", "counterexample1", "extremal"}:
            raise InvalidParameters(f"unknown generator kind {self.kind!r}")


def generate_sequence(spec: GeneratorSpec) -> BidegreeSequence:
    """Run the generator a :class:`GeneratorSpec` describes."""

    def need(value, name):
        if value is None:
            raise InvalidParameters(f"{spec.kind} generator requires {name}")
        return value

    if spec.kind == "uniform":
        return gen_uniform(
            need(spec.n, "n"),
            need(spec.total, "total"),
            need(spec.min_degree, "min_degree"),
            need(spec.max_degree, "max_degree"),
            spec.seed,
        )
    if spec.kind == "powerlaw":
        return gen_powerlaw(
            need(spec.n, "n"), need(spec.exponent, "exponent"), spec.seed
        )
    if spec.kind == "counterexample1":
        return gen_counterexample1(
            need(spec.max_in, "max_in"), need(spec.max_out, "max_out"), spec.n
        )
    return gen_extremal(
        need(spec.n, "n"), need(spec.total, "total"), need(spec.max_degree, "max_degree")
    )
