"""Verification harness for the harmonic-sum identity layers.

Exact checks compare both sides of an identity in rational arithmetic and
pass only when every residual vanishes.  Numeric checks on infinite series
split the requested accuracy across all series involved, sum each one until
its rigorous tail bound fits its share, and then compare; within-eps
agreement is therefore certified, not a float coincidence.  Limit-side
checks run in floating point and treat the reported truncation estimates
as error bars on top of the stated tolerance.

Every entry point returns VerificationReport records with a stable JSON
shape, suitable both for the command line and for the test suite.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .evaluators import classical_zeta, frakz, mhs_many, mollified_mhs_many, q_zeta
from .expansion import Triple, expand
from .indices import THETA, SignedIndex, bar, boxplus, idx, oplus
from .indices import delta as sign_of
from .qarith import QContext, QLike, as_q
from .rules import (
    CLOSED_FAMILIES,
    Composition,
    classical_expand,
    closed_pattern,
    compose,
    zeta_admissible,
)

DEFAULT_SEED = 101
_RESIDUAL_CAP = 16

Number = Union[str, float, None]


def thread_count() -> int:
    """Worker cap from QZETA_THREADS (defaults to sequential)."""
    raw = os.environ.get("QZETA_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def _map_ordered(fn, items: Iterable) -> list:
    items = list(items)
    workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass
class VerificationReport:
    case: str
    family: str
    params: dict
    q: Optional[str]
    n_range: Optional[list]
    status: str
    residuals: list
    discrepancy: Number
    tail_bound: Number
    seed: Optional[int]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return self.status in ("exact-pass", "numeric-pass")

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "family": self.family,
            "params": self.params,
            "q": self.q,
            "n_range": list(self.n_range) if self.n_range is not None else None,
            "status": self.status,
            "residuals": list(self.residuals),
            "discrepancy": self.discrepancy,
            "tail_bound": self.tail_bound,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


_EXACT_DIGITS = 10**30


def rational_repr(x: Fraction) -> str:
    """Exact "p/q" when compact, else a 12-digit decimal approximation.

    The certified comparisons always run on the exact values; this only
    controls how report fields are written out, where a residual from a
    high-precision series check can have thousands of digits."""
    x = Fraction(x)
    if abs(x.numerator) < _EXACT_DIGITS and x.denominator < _EXACT_DIGITS:
        return str(x)
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _q_label(q_values: Sequence[Fraction]) -> str:
    return ",".join(str(q) for q in q_values)


def _comp_label(composition: Sequence[int]) -> str:
    return ",".join(str(e) for e in composition)


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(report.passed for report in reports)


def verify_mhs(
    composition: Sequence[int],
    n_max: int = 10,
    q_values: Sequence[QLike] = (Fraction(1, 2),),
    case: Optional[str] = None,
    family: str = "composition",
) -> VerificationReport:
    """Exact check of the finite weak-sum identity at every n <= n_max."""
    t0 = time.perf_counter()
    comp = tuple(composition)
    qs = [as_q(q) for q in q_values]
    d, pattern = compose(comp)
    triples = expand(pattern)
    residuals: list[str] = []
    failed = False
    worst = Fraction(0)
    checks = 0
    for q in qs:
        ctx = QContext(q)
        lhs = mhs_many(ctx, comp, n_max, star=True)
        parts = _map_ordered(lambda T: mollified_mhs_many(ctx, T, n_max), triples)
        for n in range(n_max + 1):
            rhs = d * sum(part[n] for part in parts)
            res = lhs[n] - rhs
            checks += 1
            if res:
                failed = True
                worst = max(worst, abs(res))
                if len(residuals) < _RESIDUAL_CAP:
                    residuals.append(f"q={q} n={n}: {rational_repr(res)}")
    return VerificationReport(
        case=case or f"weak-sum {_comp_label(comp)}",
        family=family,
        params={
            "composition": list(comp),
            "delta": d,
            "terms": len(triples),
            "checks": checks,
        },
        q=_q_label(qs),
        n_range=[0, n_max],
        status="fail" if failed else "exact-pass",
        residuals=residuals,
        discrepancy=rational_repr(worst),
        tail_bound=None,
        seed=None,
        elapsed_ms=_ms(t0),
    )


def verify_qmzsv(
    composition: Sequence[int],
    q: QLike = Fraction(1, 2),
    eps: QLike = Fraction(1, 10**25),
    case: Optional[str] = None,
    family: str = "composition",
) -> VerificationReport:
    """Certified numeric check of the infinite weak-sum identity.

    The accuracy budget is split evenly over all series (both sides), each
    summed until its rigorous tail bound fits the share, so the two sides
    of a true identity can differ by at most eps/2 < eps.
    """
    t0 = time.perf_counter()
    comp = tuple(composition)
    if not zeta_admissible(comp):
        raise ValueError(f"composition {comp} needs a leading entry >= 2")
    qv = as_q(q)
    epsv = Fraction(eps)
    ctx = QContext(qv)
    d, pattern = compose(comp)
    triples = expand(pattern)
    budget = epsv / (2 * (1 + len(triples)))
    lhs = q_zeta(ctx, comp, eps=budget, star=True)
    parts = _map_ordered(lambda T: frakz(ctx, T, eps=budget), triples)
    rhs = d * sum(part.value for part in parts)
    tail_total = lhs.tail_bound + sum(part.tail_bound for part in parts)
    disc = abs(lhs.value - rhs)
    return VerificationReport(
        case=case or f"weak-zeta {_comp_label(comp)}",
        family=family,
        params={
            "composition": list(comp),
            "delta": d,
            "series": 1 + len(triples),
            "eps": str(epsv),
        },
        q=str(qv),
        n_range=None,
        status="numeric-pass" if disc <= epsv else "fail",
        residuals=[],
        discrepancy=rational_repr(disc),
        tail_bound=rational_repr(tail_total),
        seed=None,
        elapsed_ms=_ms(t0),
    )


def verify_classical(
    composition: Sequence[int],
    K: int = 10**6,
    tol: float = 1e-4,
    case: Optional[str] = None,
    family: str = "composition",
) -> VerificationReport:
    """Floating-point check of the q -> 1 shadow at truncation K.

    Both sides are partial sums, so the pass condition allows the stated
    tolerance plus the truncation estimates reported for every series; the
    estimates are heuristic (leading-term integral comparisons), not the
    certified bounds of the q-side checks.
    """
    t0 = time.perf_counter()
    comp = tuple(composition)
    terms = classical_expand(comp)
    lhs = classical_zeta(comp, K=K, star=True)
    parts = _map_ordered(lambda term: classical_zeta(term.index, K=K), terms)
    rhs = 0.0
    rhs_tail = 0.0
    for term, part in zip(terms, parts):
        rhs += term.sign * term.coefficient * part.value
        rhs_tail += term.coefficient * part.tail_est
    allowance = tol + lhs.tail_est + rhs_tail
    disc = abs(lhs.value - rhs)
    return VerificationReport(
        case=case or f"classical {_comp_label(comp)}",
        family=family,
        params={
            "composition": list(comp),
            "terms": len(terms),
            "K": K,
            "tol": tol,
            "lhs": lhs.value,
            "rhs": rhs,
            "allowance": allowance,
        },
        q=None,
        n_range=None,
        status="numeric-pass" if disc <= allowance else "fail",
        residuals=[],
        discrepancy=disc,
        tail_bound=lhs.tail_est + rhs_tail,
        seed=None,
        elapsed_ms=_ms(t0),
    )


def _kernel_alternating(n_max: int, q_values: Sequence[Fraction]) -> VerificationReport:
    """Telescoping alternating kernel sum against its closed form."""
    t0 = time.perf_counter()
    residuals: list[str] = []
    failed = False
    checks = 0
    for q in q_values:
        ctx = QContext(q)
        for n in range(2, n_max + 1):
            acc = Fraction(0)
            rows = {}
            for k in range(n, 0, -1):
                acc += ctx.a_kernel(n, k)
                rows[k - 1] = acc
            for l in range(1, n):
                rhs = (
                    (ctx.q_int(l) - ctx.q_int(n))
                    / ctx.q_int(n)
                    * ctx.binom_ratio(n, l)
                    * (-1) ** l
                    * ctx.qpow(l * (l - 1) // 2)
                )
                res = rows[l] - rhs
                checks += 1
                if res:
                    failed = True
                    if len(residuals) < _RESIDUAL_CAP:
                        residuals.append(f"q={q} n={n} l={l}: {rational_repr(res)}")
    return VerificationReport(
        case="alternating-kernel-sum",
        family="kernel",
        params={"checks": checks},
        q=_q_label(q_values),
        n_range=[1, n_max],
        status="fail" if failed else "exact-pass",
        residuals=residuals,
        discrepancy="0" if not failed else None,
        tail_bound=None,
        seed=None,
        elapsed_ms=_ms(t0),
    )


def _kernel_weighted(n_max: int, q_values: Sequence[Fraction]) -> VerificationReport:
    """Weighted kernel sum (extra [k] q^{k(k-1)/2} factor) closed form."""
    t0 = time.perf_counter()
    residuals: list[str] = []
    failed = False
    checks = 0
    for q in q_values:
        ctx = QContext(q)
        for n in range(2, n_max + 1):
            acc = Fraction(0)
            rows = {}
            for k in range(n, 0, -1):
                acc += (
                    (1 + ctx.qpow(k))
                    * ctx.q_int(k)
                    * ctx.binom_ratio(n, k)
                    * ctx.qpow(k * (k - 1))
                )
                rows[k - 1] = acc
            for l in range(1, n):
                rhs = (
                    (ctx.q_int(n) - ctx.q_int(l))
                    * ctx.binom_ratio(n, l)
                    * ctx.qpow(l * l)
                )
                res = rows[l] - rhs
                checks += 1
                if res:
                    failed = True
                    if len(residuals) < _RESIDUAL_CAP:
                        residuals.append(f"q={q} n={n} l={l}: {rational_repr(res)}")
    return VerificationReport(
        case="weighted-kernel-sum",
        family="kernel",
        params={"checks": checks},
        q=_q_label(q_values),
        n_range=[1, n_max],
        status="fail" if failed else "exact-pass",
        residuals=residuals,
        discrepancy="0" if not failed else None,
        tail_bound=None,
        seed=None,
        elapsed_ms=_ms(t0),
    )


def inverse_power_pattern(c: int) -> Triple:
    """Pattern whose expansion represents -1/[n]^c as mollified sums."""
    if c < 0:
        raise ValueError(f"need c >= 0, got {c}")
    return Triple(
        (bar(0),) + (idx(1),) * c,
        (0,) * (c + 1),
        (1,) + (THETA,) * c,
    )


def _inverse_power(c_max: int, n_max: int, q: Fraction) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = QContext(q)
    residuals: list[str] = []
    failed = False
    checks = 0
    for c in range(c_max + 1):
        parts = [
            mollified_mhs_many(ctx, T, n_max) for T in expand(inverse_power_pattern(c))
        ]
        for n in range(1, n_max + 1):
            res = Fraction(1) / ctx.q_int(n) ** c + sum(part[n] for part in parts)
            checks += 1
            if res:
                failed = True
                if len(residuals) < _RESIDUAL_CAP:
                    residuals.append(f"c={c} n={n}: {rational_repr(res)}")
    return VerificationReport(
        case="inverse-power-expansion",
        family="kernel",
        params={"c_max": c_max, "checks": checks},
        q=str(q),
        n_range=[1, n_max],
        status="fail" if failed else "exact-pass",
        residuals=residuals,
        discrepancy="0" if not failed else None,
        tail_bound=None,
        seed=None,
        elapsed_ms=_ms(t0),
    )


def head_reduction_pattern(a: SignedIndex, b: int, c: int, r) -> Triple:
    """Pattern for pulling a factor 1/[n]^c into a leading slot."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    return Triple(
        (bar(0),) + (idx(1),) * (c - 1) + (oplus(a, bar(1)),),
        (0,) * c + (b,),
        (1,) + (THETA,) * (c - 1) + (r,),
    )


def _head_reduction(
    samples: int, seed: int, n_max: int, q: Fraction
) -> VerificationReport:
    """Randomized exact check of the head-reduction expansion with tails.

    The shift r is sampled away from -1: there the merged slot of the
    pattern would fold 1 with r into the empty shift while the underlying
    identity produces the integer 0, and the two exponents differ.
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    ctx = QContext(q)
    shift_pool = [THETA] + [r for r in range(-5, 7) if r not in (0, -1)]
    tail_shift_pool = [THETA] + list(range(-2, 3))
    residuals: list[str] = []
    failed = False
    checks = 0
    cases = []
    for _ in range(samples):
        a = SignedIndex(rng.randint(0, 3), rng.choice([1, -1]))
        b = rng.randint(0, 3)
        c = rng.randint(1, 3)
        r = rng.choice(shift_pool)
        x = SignedIndex(rng.randint(0, 2), rng.choice([1, -1]))
        y = rng.randint(0, 2)
        z = rng.choice(tail_shift_pool)
        cases.append(f"a={a} b={b} c={c} r={r} tail=[{x};{y};{z}]")
        lhs_triple = Triple((a, x), (b, y), (boxplus(r, 1), z))
        lhs_vals = mollified_mhs_many(ctx, lhs_triple, n_max)
        parts = []
        for T in expand(head_reduction_pattern(a, b, c, r)):
            with_tail = Triple(T.s + (x,), T.t + (y,), T.r + (z,))
            parts.append(mollified_mhs_many(ctx, with_tail, n_max))
        for n in range(1, n_max + 1):
            lhs = lhs_vals[n] / ctx.q_int(n) ** c
            res = lhs - sum(part[n] for part in parts)
            checks += 1
            if res:
                failed = True
                if len(residuals) < _RESIDUAL_CAP:
                    residuals.append(f"{cases[-1]} n={n}: {rational_repr(res)}")
    return VerificationReport(
        case="head-reduction",
        family="kernel",
        params={"samples": samples, "cases": cases, "checks": checks},
        q=str(q),
        n_range=[1, n_max],
        status="fail" if failed else "exact-pass",
        residuals=residuals,
        discrepancy="0" if not failed else None,
        tail_bound=None,
        seed=seed,
        elapsed_ms=_ms(t0),
    )


def _kernel_step(n_max: int, a_max: int, q_values: Sequence[Fraction]) -> VerificationReport:
    """Geometric bridge between kernels at consecutive upper limits."""
    t0 = time.perf_counter()
    residuals: list[str] = []
    failed = False
    checks = 0
    for q in q_values:
        ctx = QContext(q)
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                ratio = (ctx.q_int(n) / ctx.q_int(k)) ** 2 * ctx.qpow(k - n)
                geom = Fraction(0)
                power = Fraction(1)
                for a in range(a_max + 1):
                    geom += power
                    lhs = ctx.a_kernel(n - 1, k) * geom
                    rhs = ctx.a_kernel(n, k) * (power - 1 / ratio)
                    res = lhs - rhs
                    checks += 1
                    if res:
                        failed = True
                        if len(residuals) < _RESIDUAL_CAP:
                            residuals.append(f"q={q} n={n} k={k} a={a}: {rational_repr(res)}")
                    power *= ratio
    return VerificationReport(
        case="kernel-step",
        family="kernel",
        params={"a_max": a_max, "checks": checks},
        q=_q_label(q_values),
        n_range=[1, n_max],
        status="fail" if failed else "exact-pass",
        residuals=residuals,
        discrepancy="0" if not failed else None,
        tail_bound=None,
        seed=None,
        elapsed_ms=_ms(t0),
    )


LEMMA_PARTS = (
    "alternating-kernel-sum",
    "weighted-kernel-sum",
    "inverse-power-expansion",
    "head-reduction",
    "kernel-step",
)


def lemma_suite(
    n_max: int = 40,
    q_values: Sequence[QLike] = (Fraction(1, 2), Fraction(1, 3), Fraction(9, 10)),
    seed: int = DEFAULT_SEED,
    samples: int = 10,
    parts: Optional[Sequence[str]] = None,
    inverse_c_max: int = 4,
    inverse_n_max: int = 25,
    head_n_max: int = 15,
    step_a_max: int = 3,
) -> list[VerificationReport]:
    """Run the supporting-identity checks and return one report per part."""
    qs = [as_q(q) for q in q_values]
    wanted = tuple(parts) if parts is not None else LEMMA_PARTS
    unknown = [p for p in wanted if p not in LEMMA_PARTS]
    if unknown:
        raise ValueError(f"unknown lemma parts {unknown}; known: {list(LEMMA_PARTS)}")
    reports = []
    if "alternating-kernel-sum" in wanted:
        reports.append(_kernel_alternating(n_max, qs))
    if "weighted-kernel-sum" in wanted:
        reports.append(_kernel_weighted(n_max, qs))
    if "inverse-power-expansion" in wanted:
        reports.append(_inverse_power(inverse_c_max, inverse_n_max, qs[0]))
    if "head-reduction" in wanted:
        reports.append(_head_reduction(samples, seed, head_n_max, qs[0]))
    if "kernel-step" in wanted:
        reports.append(_kernel_step(n_max, step_a_max, qs))
    return reports


def symmetric_pair_check(
    a: int,
    b: int,
    q: QLike = Fraction(1, 2),
    eps: QLike = Fraction(1, 10**25),
) -> VerificationReport:
    """Certified check of the symmetrized product identity.

    The sum of the two mirror-image weak zeta values equals the product of
    two plain weak zeta values plus a (1-q)-weighted mollified series; the
    product's error is propagated explicitly.
    """
    t0 = time.perf_counter()
    qv = as_q(q)
    epsv = Fraction(eps)
    ctx = QContext(qv)
    budget = epsv / 12
    z_ab = q_zeta(ctx, (2,) * a + (3,) + (2,) * b + (1,), eps=budget, star=True)
    z_ba = q_zeta(ctx, (2,) * b + (3,) + (2,) * a + (1,), eps=budget, star=True)
    u = q_zeta(ctx, (2,) * (a + 1), eps=budget, star=True)
    v = q_zeta(ctx, (2,) * (b + 1), eps=budget, star=True)
    w = frakz(
        ctx,
        Triple((idx(2 * a + 2 * b + 3),), (a + b + 2,), (2,)),
        eps=budget,
    )
    lhs = z_ab.value + z_ba.value
    rhs = u.value * v.value + (1 - qv) * w.value
    product_tail = abs(u.value) * v.tail_bound + abs(v.value) * u.tail_bound
    product_tail += u.tail_bound * v.tail_bound
    tail_total = (
        z_ab.tail_bound + z_ba.tail_bound + product_tail + (1 - qv) * w.tail_bound
    )
    disc = abs(lhs - rhs)
    return VerificationReport(
        case=f"symmetric-pair a={a} b={b}",
        family="symmetric-pair",
        params={"a": a, "b": b, "eps": str(epsv)},
        q=str(qv),
        n_range=None,
        status="numeric-pass" if disc <= epsv else "fail",
        residuals=[],
        discrepancy=rational_repr(disc),
        tail_bound=rational_repr(tail_total),
        seed=None,
        elapsed_ms=_ms(t0),
    )


def qmzsv_battery(
    q: QLike = Fraction(1, 2),
    eps: QLike = Fraction(1, 10**25),
    small: bool = False,
) -> list[VerificationReport]:
    """Certified numeric checks of the headline infinite-sum identities."""
    qv = as_q(q)
    epsv = Fraction(eps)
    reports: list[VerificationReport] = []
    span = range(2) if small else range(3)
    for a, b in itertools.product(span, span):
        comp = (2,) * b + (3,) + (2,) * a + (1,)
        reports.append(
            verify_qmzsv(
                comp, q=qv, eps=epsv, case=f"two-term a={a} b={b}", family="2c21"
            )
        )
    display = [(1, 0, 0), (1, 1, 0), (1, 0, 1)] if small else [
        (1, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (1, 1, 1),
    ]
    for a0, b, a1 in display:
        comp = (2,) * a0 + (1,) + (2,) * b + (3,) + (2,) * a1 + (1,)
        reports.append(
            verify_qmzsv(
                comp,
                q=qv,
                eps=epsv,
                case=f"leading-ones display a0={a0} b={b} a1={a1}",
                family="212c21",
            )
        )
    for a, b in itertools.product(span, span):
        reports.append(symmetric_pair_check(a, b, q=qv, eps=epsv))
    key_span = [(1, b, c, d) for b in range(2) for c in range(2) for d in range(2)]
    if small:
        key_span = key_span[:4]
    for a, b, c, d in key_span:
        comp = (2,) * a + (1,) + (2,) * b + (1,) + (2,) * c + (3,) + (2,) * d + (1,)
        reports.append(
            verify_qmzsv(
                comp,
                q=qv,
                eps=epsv,
                case=f"key-expansion a={a} b={b} c={c} d={d}",
                family="key",
            )
        )
    return reports


def classical_battery(
    K_pair: int = 10**6,
    K_key: int = 10**7,
) -> list[VerificationReport]:
    """Floating-point checks of the limit identities at fixed truncations."""
    return [
        verify_classical((2, 1), K=K_pair, tol=1e-5, case="depth-two limit"),
        verify_classical((2, 1, 1, 3, 1), K=K_key, tol=1e-4, case="key limit"),
        verify_classical((2, 2), K=K_pair, tol=1e-6, case="double-two limit"),
    ]


def sample_compositions(
    count: int = 200,
    max_depth: int = 6,
    max_weight: int = 12,
    seed: int = DEFAULT_SEED,
) -> list[Composition]:
    """Deterministic fuzz corpus of compositions."""
    rng = random.Random(seed)
    out: list[Composition] = []
    for _ in range(count):
        depth = rng.randint(1, max_depth)
        remaining = max_weight
        entries: list[int] = []
        for i in range(depth):
            hi = remaining - (depth - i - 1)
            if hi < 1:
                break
            e = rng.randint(1, hi)
            entries.append(e)
            remaining -= e
        out.append(tuple(entries))
    return out


def _group_seqs(budget: int):
    """(b, c, a)-group sequences with total weight <= budget (incl. empty)."""
    yield (), (), (), 0
    if budget < 4:
        return
    for b in range((budget - 4) // 2 + 1):
        for c in range(3, budget - 2 * b):
            for a in range((budget - 2 * b - c - 1) // 2 + 1):
                w = 2 * b + c + 2 * a + 1
                for bs, cs, as_, w2 in _group_seqs(budget - w):
                    yield (b,) + bs, (c,) + cs, (a,) + as_, w + w2


def _instances_2c2(budget: int):
    def pairs(rem: int):
        yield (), (), 0
        if rem < 3:
            return
        for a in range((rem - 3) // 2 + 1):
            for c in range(3, rem - 2 * a + 1):
                w = 2 * a + c
                for as_, cs, w2 in pairs(rem - w):
                    yield (a,) + as_, (c,) + cs, w + w2

    for a in range(1, budget // 2 + 1):
        yield ((a,), ())
    for as_, cs, w in pairs(budget):
        if cs:
            for a_last in range((budget - w) // 2 + 1):
                yield (as_ + (a_last,), cs)


def family_instances(family: str, max_weight: int = 12):
    """All parameter tuples of a closed family with weight <= max_weight."""
    W = max_weight
    if family == "twos":
        for a in range(1, W // 2 + 1):
            yield (a,)
    elif family == "twos-ones":
        for a in range(W // 2 + 1):
            for l in range(1, W - 2 * a + 1):
                yield (a, l)
    elif family == "c-ones":
        for c in range(3, W):
            for l in range(1, W - c + 1):
                yield (c, l)
    elif family == "2c2":
        yield from _instances_2c2(W)
    elif family == "2c21":
        for bs, cs, as_, _ in _group_seqs(W):
            if bs:
                yield (bs, cs, as_)
    elif family == "212c21":
        for bs, cs, as_, w in _group_seqs(W - 1):
            for a0 in range((W - 1 - w) // 2 + 1):
                yield (a0, bs, cs, as_)
    elif family == "2c212":
        for bs, cs, as_, w in _group_seqs(W - 2):
            if bs:
                for a_last in range(1, (W - w) // 2 + 1):
                    yield (bs, cs, as_, a_last)
    elif family == "212c212":
        for bs, cs, as_, w in _group_seqs(W - 3):
            for a0 in range((W - 3 - w) // 2 + 1):
                rem = W - 1 - 2 * a0 - w
                for a_last in range(1, rem // 2 + 1):
                    yield (a0, bs, cs, as_, a_last)
    else:
        known = ", ".join(sorted(CLOSED_FAMILIES))
        raise ValueError(f"unknown family {family!r} (known: {known})")


def family_equivalence(family: str, max_weight: int = 12) -> VerificationReport:
    """Closed-form patterns must match the general composer exactly."""
    t0 = time.perf_counter()
    mismatches: list[str] = []
    failed = False
    checks = 0
    for args in family_instances(family, max_weight):
        comp, closed = closed_pattern(family, *args)
        direct = compose(comp)
        checks += 1
        ok = closed == direct and closed.delta == sign_of(comp)
        if not ok:
            failed = True
            if len(mismatches) < _RESIDUAL_CAP:
                mismatches.append(
                    f"{family}{args}: closed=({closed.delta}, {closed.pattern})"
                    f" direct=({direct.delta}, {direct.pattern})"
                )
    return VerificationReport(
        case=f"closed-form match {family}",
        family=family,
        params={"max_weight": max_weight, "checks": checks},
        q=None,
        n_range=None,
        status="fail" if failed else "exact-pass",
        residuals=mismatches,
        discrepancy=None,
        tail_bound=None,
        seed=None,
        elapsed_ms=_ms(t0),
    )


def run_family(
    family: str,
    max_weight: int = 10,
    n_max: int = 8,
    q_values: Sequence[QLike] = (Fraction(1, 2),),
    spot_checks: int = 5,
) -> list[VerificationReport]:
    """Structural equivalence plus a few exact evaluations for a family."""
    reports = [family_equivalence(family, max_weight)]
    for args in itertools.islice(family_instances(family, max_weight), spot_checks):
        comp, _ = closed_pattern(family, *args)
        reports.append(
            verify_mhs(
                comp,
                n_max=n_max,
                q_values=q_values,
                case=f"weak-sum {family}{args}",
                family=family,
            )
        )
    return reports
