"""Exact rational arithmetic for a fixed base q in (0, 1).

Everything is computed over :class:`fractions.Fraction`, so all identities
checked downstream are exact.  A :class:`QContext` memoizes powers of q,
q-integers, q-Pochhammer symbols and Gaussian binomials, plus the per-index
term factors used by the sum evaluators; sharing one context across a large
batch of evaluations is what makes the exhaustive checks affordable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .indices import Shift, SignedIndex, quad_exponent

QLike = Union[Fraction, int, str]


def as_q(value: QLike) -> Fraction:
    q = Fraction(value)
    if not 0 < q < 1:
        raise ValueError(f"q must lie strictly between 0 and 1, got {q}")
    return q


class QContext:
    """Memoized exact arithmetic at a fixed rational q in (0, 1)."""

    def __init__(self, q: QLike):
        self.q = as_q(q)
        self.one_minus_q = 1 - self.q
        self._qpow: dict[int, Fraction] = {0: Fraction(1), 1: self.q}
        self._qint: dict[int, Fraction] = {}
        self._poch: list[Fraction] = [Fraction(1)]
        self._gauss: dict[tuple[int, int], Fraction] = {}
        self._br: dict[tuple[int, int], Fraction] = {}
        self._ak: dict[tuple[int, int], Fraction] = {}
        self._hterm: dict[tuple[int, int, int], Fraction] = {}
        self._mterm: dict[tuple[int, int, int, Shift, int], Fraction] = {}

    def __repr__(self) -> str:
        return f"QContext(q={self.q})"

    def qpow(self, n: int) -> Fraction:
        """q**n for any integer n."""
        cached = self._qpow.get(n)
        if cached is None:
            cached = self.q ** n
            self._qpow[n] = cached
        return cached

    def q_int(self, n: int) -> Fraction:
        """q-integer [n] = (1 - q**n) / (1 - q)."""
        cached = self._qint.get(n)
        if cached is None:
            cached = (1 - self.qpow(n)) / self.one_minus_q
            self._qint[n] = cached
        return cached

    def poch(self, n: int) -> Fraction:
        """q-Pochhammer (q; q)_n = prod_{i=1..n} (1 - q**i)."""
        if n < 0:
            raise ValueError(f"Pochhammer order must be >= 0, got {n}")
        while len(self._poch) <= n:
            i = len(self._poch)
            self._poch.append(self._poch[-1] * (1 - self.qpow(i)))
        return self._poch[n]

    def gauss_binomial(self, n: int, m: int) -> Fraction:
        """Gaussian binomial; zero outside 0 <= m <= n."""
        if m < 0 or m > n:
            return Fraction(0)
        key = (n, m)
        cached = self._gauss.get(key)
        if cached is None:
            cached = self.poch(n) / (self.poch(m) * self.poch(n - m))
            self._gauss[key] = cached
        return cached

    def binom_ratio(self, n: int, k: int) -> Fraction:
        """Ratio gauss(n, k) / gauss(n + k, k); zero when k > n."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        if k > n:
            return Fraction(0)
        key = (n, k)
        cached = self._br.get(key)
        if cached is None:
            cached = self.gauss_binomial(n, k) / self.gauss_binomial(n + k, k)
            self._br[key] = cached
        return cached

    def a_kernel(self, n: int, k: int) -> Fraction:
        """Kernel A(n, k) = (-1)^k (1 + q^k) q^{k(k-1)/2} gauss(n,k)/gauss(n+k,k)."""
        key = (n, k)
        cached = self._ak.get(key)
        if cached is None:
            sign = -1 if k % 2 else 1
            cached = sign * (1 + self.qpow(k)) * self.qpow(k * (k - 1) // 2) * self.binom_ratio(n, k)
            self._ak[key] = cached
        return cached

    def harmonic_term(self, entry: SignedIndex, k: int) -> Fraction:
        """Term sgn^k q^k / [k]^mag of a plain harmonic sum at index k."""
        key = (entry.magnitude, entry.sign, k)
        cached = self._hterm.get(key)
        if cached is None:
            cached = self.qpow(k) / self.q_int(k) ** entry.magnitude
            if entry.sign < 0 and k % 2:
                cached = -cached
            self._hterm[key] = cached
        return cached

    def mollified_term(self, entry: SignedIndex, t: int, r: Shift, k: int) -> Fraction:
        """Term q^{t k + Q(r, k)} (1 + q^k) sgn^k / [k]^mag at index k."""
        key = (entry.magnitude, entry.sign, t, r, k)
        cached = self._mterm.get(key)
        if cached is None:
            exponent = t * k + quad_exponent(r, k)
            cached = self.qpow(exponent) * (1 + self.qpow(k)) / self.q_int(k) ** entry.magnitude
            if entry.sign < 0 and k % 2:
                cached = -cached
            self._mterm[key] = cached
        return cached
