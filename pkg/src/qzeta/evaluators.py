"""Finite and infinite sum evaluators.

Exact evaluators (over Fraction, via a shared :class:`~qzeta.qarith.QContext`):

* :func:`mhs` / :func:`mhs_many`: finite nested harmonic sums over strictly
  decreasing (default) or weakly decreasing (``star=True``) index tuples.
* :func:`mollified_mhs` / :func:`mollified_mhs_many`: finite mollified sums
  over a :class:`~qzeta.expansion.Triple`, with the binomial-ratio prefactor
  tied to the outermost index.
* :func:`q_zeta`: infinite harmonic series, evaluated to a proven tail bound.
* :func:`frakz`: infinite mollified series (no prefactor), admissible
  triples only, evaluated to a proven tail bound.

The one floating-point evaluator, :func:`classical_zeta`, computes partial
sums of classical (signed) multiple zeta values with numpy and reports a
first-omitted-term style tail estimate.

All nested-sum evaluators share the same dynamic programming scheme: one
running cumulative per nesting level, updated index by index, so a whole
family of values costs the same as the deepest single one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .expansion import Triple, is_admissible
from .indices import SignedIndex, signed_string
from .qarith import QContext


class SeriesValue(NamedTuple):
    """Partial sum with a rigorous bound on the omitted tail."""

    value: Fraction
    tail_bound: Fraction
    terms: int


class ClassicalValue(NamedTuple):
    """Float partial sum with a heuristic estimate of the omitted tail."""

    value: float
    tail_est: float
    terms: int


@dataclass(frozen=True)
class SeriesConfig:
    """Evaluation budget for the infinite-series evaluators."""

    eps: Fraction = Fraction(1, 10**20)
    max_terms: int = 100_000

    def __post_init__(self) -> None:
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


def mhs_many(ctx: QContext, s: Sequence, n_max: int, star: bool = False) -> list[Fraction]:
    """Values of the nested harmonic sum for every upper limit 0..n_max."""
    entries = signed_string(s)
    m = len(entries)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if m == 0:
        return [Fraction(1)] * (n_max + 1)
    cums = [Fraction(0)] * m
    out = [Fraction(0)]
    for k in range(1, n_max + 1):
        if star:
            # weak descent: level j sees level j+1 already updated at k
            for j in range(m - 1, -1, -1):
                inner = cums[j + 1] if j + 1 < m else Fraction(1)
                cums[j] += ctx.harmonic_term(entries[j], k) * inner
        else:
            # strict descent: level j sees level j+1 as of k-1, so update
            # top-down before touching deeper cumulatives
            for j in range(m):
                inner = cums[j + 1] if j + 1 < m else Fraction(1)
                cums[j] += ctx.harmonic_term(entries[j], k) * inner
        out.append(cums[0])
    return out


def mhs(ctx: QContext, s: Sequence, n: int, star: bool = False) -> Fraction:
    """Nested harmonic sum with upper limit n (zero when too short)."""
    return mhs_many(ctx, s, n, star=star)[n]


def _mollified_inner(ctx: QContext, triple: Triple, k_max: int) -> list[Fraction]:
    """inner[k] = outermost term at k times the strict nested sum of the
    remaining levels below k; 1-based, inner[0] unused."""
    m = triple.depth
    cums = [Fraction(0)] * m
    inner = [Fraction(0)] * (k_max + 1)
    for k in range(1, k_max + 1):
        below = cums[1] if m > 1 else Fraction(1)
        inner[k] = ctx.mollified_term(triple.s[0], triple.t[0], triple.r[0], k) * below
        for j in range(1, m):
            deeper = cums[j + 1] if j + 1 < m else Fraction(1)
            cums[j] += ctx.mollified_term(triple.s[j], triple.t[j], triple.r[j], k) * deeper
    return inner


def mollified_mhs_many(ctx: QContext, triple: Triple, n_max: int) -> list[Fraction]:
    """Finite mollified sums for every upper limit 0..n_max.

    The prefactor couples the upper limit n to the outermost index, so the
    inner nested sums are computed once and reweighted per n.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    inner = _mollified_inner(ctx, triple, n_max)
    out = [Fraction(0)]
    for n in range(1, n_max + 1):
        out.append(sum((ctx.binom_ratio(n, k) * inner[k] for k in range(1, n + 1)), Fraction(0)))
    return out


def mollified_mhs(ctx: QContext, triple: Triple, n: int) -> Fraction:
    """Finite mollified sum with upper limit n."""
    return mollified_mhs_many(ctx, triple, n)[n]


def q_zeta(
    ctx: QContext, s: Sequence, eps: Fraction = Fraction(1, 10**20), star: bool = False
) -> SeriesValue:
    """Infinite harmonic series, summed until the proven tail bound is <= eps.

    Tail bound: the entries satisfy 1/[k]^mag <= 1, so the series is

        |tail(K)| <= (q/(1-q))**(m-1) * q**(K+1) / (1-q),

    the unconstrained product of geometric tails.
    """
    entries = signed_string(s)
    m = len(entries)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if m == 0:
        return SeriesValue(Fraction(1), Fraction(0), 0)
    prefactor = (ctx.q / ctx.one_minus_q) ** (m - 1) / ctx.one_minus_q
    K = m
    while prefactor * ctx.qpow(K + 1) > eps:
        K += 1
    value = mhs(ctx, entries, K, star=star)
    return SeriesValue(value, prefactor * ctx.qpow(K + 1), K)


def _frakz_level_bound(ctx: QContext, m: int, k: int) -> Fraction:
    """Bound on the total contribution of all terms with outermost index k."""
    expo = k * (k - 1) // 2 - (m - 1) * k
    return Fraction(2**m * k ** (m - 1)) * ctx.qpow(expo)


def frakz(
    ctx: QContext, triple: Triple, eps: Fraction = Fraction(1, 10**20)
) -> SeriesValue:
    """Infinite mollified series, summed until the proven tail bound is <= eps.

    Only admissible triples converge: every left-to-right partial fold of the
    shift string must project into {1, 2}.  Under that condition the folded
    quadratic exponents telescope to at least k1*(k1-1)/2 - (m-1)*k1, which
    yields a superexponentially decaying per-level bound and, once the level
    ratio rho = 2**(m-1) * q**(K+2-m) drops below 1, a geometric tail bound
    B(K+1) / (1 - rho).
    """
    if not is_admissible(triple):
        raise ValueError(f"divergent mollified series: inadmissible shifts in {triple}")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = triple.depth
    cums = [Fraction(0)] * m

    def advance(k: int) -> None:
        for j in range(m):
            deeper = cums[j + 1] if j + 1 < m else Fraction(1)
            cums[j] += ctx.mollified_term(triple.s[j], triple.t[j], triple.r[j], k) * deeper

    K = 0

    def tail_bound(K: int) -> Fraction | None:
        rho = Fraction(2 ** (m - 1)) * ctx.qpow(K + 2 - m)
        if rho >= 1:
            return None
        return _frakz_level_bound(ctx, m, K + 1) / (1 - rho)

    while True:
        bound = tail_bound(K)
        if bound is not None and bound <= eps:
            return SeriesValue(cums[0], bound, K)
        K += 1
        advance(K)


def _classical_check(entries: tuple, star: bool) -> None:
    lead = entries[0]
    if star:
        if lead.magnitude < 2:
            raise ValueError("weak-descent series needs a leading magnitude >= 2")
    elif lead.magnitude < 2 and not (lead.magnitude == 1 and lead.sign < 0):
        raise ValueError("series needs leading magnitude >= 2 or a signed leading 1")


def classical_zeta(
    s: Sequence, K: int = 1_000_000, star: bool = False, chunk: int = 65536
) -> ClassicalValue:
    """Partial sum of a classical signed multiple zeta value to K terms.

    Entries are signed indices: magnitude p and sign w contribute
    w**k / k**p at index k.  Levels are streamed innermost-first over chunks
    of the index range with running (Kahan-compensated) carries, so memory
    stays at O(chunk) regardless of K.

    The tail estimate is |inner cumulative at K| times the tail of the
    outermost level: K**(1-p1)/(p1-1) for leading magnitude p1 >= 2, else
    1/K for a signed leading 1 (alternating-series first-term bound).
    """
    entries = signed_string(s)
    m = len(entries)
    if m == 0:
        return ClassicalValue(1.0, 0.0, 0)
    _classical_check(entries, star)
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")

    carries = [0.0] * m
    comps = [0.0] * m
    inner_at_K = 1.0
    start = 1
    while start <= K:
        stop = min(start + chunk - 1, K)
        ks = np.arange(start, stop + 1, dtype=np.float64)
        # strict descent reads the deeper level's cumulative one index back,
        # which at the chunk boundary is its carry from before this chunk
        prev_carries = list(carries)
        signs = None
        cumulative: np.ndarray | None = None
        for j in range(m - 1, -1, -1):
            e = entries[j]
            terms = ks ** float(-e.magnitude)
            if e.sign < 0:
                if signs is None:
                    signs = np.where(ks % 2 == 1, -1.0, 1.0)
                terms = terms * signs
            if cumulative is not None:
                if star:
                    terms = terms * cumulative
                else:
                    shifted = np.empty_like(cumulative)
                    shifted[0] = prev_carries[j + 1]
                    shifted[1:] = cumulative[:-1]
                    terms = terms * shifted
            cumulative = carries[j] + np.cumsum(terms)
            # Kahan update of the carry with this chunk's total
            y = float(cumulative[-1]) - carries[j] - comps[j]
            t = carries[j] + y
            comps[j] = (t - carries[j]) - y
            carries[j] = t
            if j == 1:
                inner_at_K = float(cumulative[-1])
        start = stop + 1

    value = carries[0]
    p1 = entries[0].magnitude
    if p1 >= 2:
        tail = abs(inner_at_K) * K ** (1 - p1) / (p1 - 1)
    else:
        tail = abs(inner_at_K) / K
    return ClassicalValue(value, tail, K)
