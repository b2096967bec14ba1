"""Floating evaluation of Hurwitz zeta, Dirichlet L-functions and truncated logs.

Every value comes back as a ``ValueWithBound``: a complex double paired with a
rigorous absolute radius covering all mathematical truncations.  Floating
rounding is excluded from the bound contract by declaration (double precision
leaves roughly four guard digits at the default target of 1e-14).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .arith import BernoulliCache, PrimeTable
from .characters import DirichletCharacter
from .errors import (
    InvalidArgumentError,
    OutOfDomainError,
    PrecisionUnreachableError,
)

DEFAULT_TARGET_EPS = 1e-14


@dataclass(frozen=True)
class ValueWithBound:
    """A complex value with a rigorous absolute error radius."""

    value: complex
    bound: float

    def __post_init__(self):
        if not (self.bound >= 0.0) or not math.isfinite(self.bound):
            raise InvalidArgumentError("bound must be a finite nonnegative real")
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise OutOfDomainError("non-finite value")

    def __add__(self, other: "ValueWithBound") -> "ValueWithBound":
        return ValueWithBound(self.value + other.value, self.bound + other.bound)

    def scaled(self, c: complex) -> "ValueWithBound":
        return ValueWithBound(c * self.value, abs(c) * self.bound)

    def exp(self) -> "ValueWithBound":
        """exp with the multiplicative propagation |exp(x)| * (e^b - 1)."""
        v = cmath.exp(self.value)
        return ValueWithBound(v, abs(v) * math.expm1(self.bound))

    def log(self) -> "ValueWithBound":
        """Principal log; requires the bound ball to stay away from 0."""
        r = abs(self.value)
        if self.bound >= r:
            raise PrecisionUnreachableError("log of a ball containing 0")
        # |log(v + d) - log(v)| <= -log(1 - b/|v|)  for |d| <= b < |v|
        return ValueWithBound(cmath.log(self.value), -math.log1p(-self.bound / r))


@dataclass(frozen=True)
class EvalParams:
    """Requested accuracy and Euler-Maclaurin starting/ceiling parameters."""

    target_eps: float = DEFAULT_TARGET_EPS
    em_terms: int = 16  # starting N
    em_order: int = 4  # starting M
    max_terms: int = 1 << 22
    max_order: int = 60

    def __post_init__(self):
        if self.target_eps <= 0:
            raise InvalidArgumentError("target_eps must be positive")
        if self.em_terms < 1 or self.em_order < 1:
            raise InvalidArgumentError("em_terms and em_order must be >= 1")


_BERNOULLI = BernoulliCache(130)


def _log_abs_fraction(fr) -> float:
    # math.log handles arbitrary-size ints exactly enough for bound work
    return math.log(abs(fr.numerator)) - math.log(fr.denominator)


def _choose_em(s: complex, x: float, params: EvalParams) -> tuple[int, int]:
    """Pick (N, M) so the Euler-Maclaurin remainder majorant is <= target_eps.

    The remainder bound is K(M) * (N + x)^(-sigma - 2M - 1) with
    K(M) = (|s+2M+1| / (sigma+2M+1)) * |B_{2M+2}| / (2M+2)! * |(s)_{2M+1}|,
    so for each M the needed N is solved directly in log space.
    """
    sigma = s.real
    log_eps = math.log(params.target_eps)
    best: tuple[int, int] | None = None
    log_poch = 0.0
    j = 0
    for m in range(1, params.max_order + 1):
        while j < 2 * m + 1:
            log_poch += math.log(abs(s + j))
            j += 1
        if m < params.em_order:
            continue
        log_k = (
            math.log(abs(s + 2 * m + 1))
            - math.log(sigma + 2 * m + 1)
            + _log_abs_fraction(_BERNOULLI[2 * m + 2])
            - math.lgamma(2 * m + 3)
            + log_poch
        )
        t = (log_k - log_eps) / (sigma + 2 * m + 1)
        need = math.ceil(math.exp(min(t, 50.0)) - x) + 1 if t > 0 else 1
        n = max(params.em_terms, need)
        if n <= params.max_terms and (best is None or n < best[0]):
            best = (n, m)
        if best is not None and best[0] <= 4 * params.em_terms:
            break
    if best is None:
        raise PrecisionUnreachableError(
            f"Euler-Maclaurin cannot reach eps={params.target_eps} within ceilings"
        )
    return best


def _hurwitz_em(s: complex, x: float, n_terms: int, order: int) -> ValueWithBound:
    """Euler-Maclaurin evaluation of zeta(s, x) with explicit (N, M)."""
    sigma = s.real
    n = np.arange(n_terms, dtype=float) + x
    value = complex(np.sum(np.exp(-s * np.log(n))))
    w = float(n_terms) + x
    logw = math.log(w)
    value += cmath.exp((1 - s) * logw) / (s - 1) + 0.5 * cmath.exp(-s * logw)

    poch = s  # (s)_{2j-1} for the current j
    wpow = cmath.exp((-s - 1) * logw)  # w^(-s-2j+1) for the current j
    for jj in range(1, order + 1):
        b = _BERNOULLI[2 * jj]
        value += float(b) / math.factorial(2 * jj) * poch * wpow
        poch *= (s + 2 * jj - 1) * (s + 2 * jj)
        wpow *= w**-2.0
    # remainder majorant, in log space to dodge overflow
    log_bound = (
        math.log(abs(s + 2 * order + 1))
        - math.log(sigma + 2 * order + 1)
        + _log_abs_fraction(_BERNOULLI[2 * order + 2])
        - math.lgamma(2 * order + 3)
        + sum(math.log(abs(s + j)) for j in range(2 * order + 1))
        - (sigma + 2 * order + 1) * logw
    )
    return ValueWithBound(value, math.exp(min(log_bound, 700.0)))


def hurwitz_zeta(s: complex, x: float, params: EvalParams = EvalParams()) -> ValueWithBound:
    """zeta(s, x) = sum_{n>=0} (n+x)^(-s) for Re s > 1 and 0 < x <= 1."""
    s = complex(s)
    if s.real <= 1:
        raise OutOfDomainError("hurwitz_zeta requires Re s > 1")
    if not (0 < x <= 1):
        raise OutOfDomainError("hurwitz_zeta requires 0 < x <= 1")
    n, m = _choose_em(s, x, params)
    out = _hurwitz_em(s, x, n, m)
    if out.bound > params.target_eps:
        raise PrecisionUnreachableError("remainder bound exceeds target_eps")
    return out


def dirichlet_l(
    s: complex,
    chi: DirichletCharacter,
    params: EvalParams = EvalParams(),
) -> ValueWithBound:
    """L(s, chi) for Re s > 1 via q^(-s) * sum_r chi(r) zeta(s, r/q)."""
    s = complex(s)
    if s.real <= 1:
        raise OutOfDomainError("dirichlet_l requires Re s > 1")
    q = chi.modulus
    # per-component eps so the summed bound still lands near target_eps
    sub = EvalParams(
        target_eps=params.target_eps,
        em_terms=params.em_terms,
        em_order=params.em_order,
        max_terms=params.max_terms,
        max_order=params.max_order,
    )
    total = 0j
    bound = 0.0
    for r in range(1, q + 1):
        c = chi(r)
        if c == 0:
            continue
        z = hurwitz_zeta(s, r / q, sub)
        total += c * z.value
        bound += z.bound
    scale = cmath.exp(-s * math.log(q)) if q > 1 else 1.0
    return ValueWithBound(scale * total, abs(scale) * bound)


class LSeries:
    """Evaluator bundling a prime table, accuracy parameters and caches."""

    def __init__(self, primes: PrimeTable, params: EvalParams = EvalParams()):
        self.primes = primes
        self.params = params
        self._l_cache: dict = {}
        self._logl_cache: dict = {}

    def hurwitz_zeta(self, s: complex, x: float) -> ValueWithBound:
        return hurwitz_zeta(s, x, self.params)

    def zeta(self, s: complex) -> ValueWithBound:
        return hurwitz_zeta(s, 1.0, self.params)

    def dirichlet_l(self, s: complex, chi: DirichletCharacter) -> ValueWithBound:
        key = (complex(s), chi)
        out = self._l_cache.get(key)
        if out is None:
            out = dirichlet_l(s, chi, self.params)
            self._l_cache[key] = out
        return out

    def zeta_p(self, s: complex, p_min: int) -> ValueWithBound:
        """zeta with Euler factors below p_min removed: zeta(s) * prod_{p<P} (1 - p^-s)."""
        s = complex(s)
        if s.real <= 1:
            raise OutOfDomainError("zeta_p requires Re s > 1")
        if p_min < 2:
            raise InvalidArgumentError("zeta_p requires P >= 2")
        z = self.zeta(s)
        factor = 1 + 0j
        for p in self.primes.below(p_min):
            factor *= 1 - cmath.exp(-s * math.log(int(p)))
        return ValueWithBound(z.value * factor, z.bound * abs(factor))

    def _branch_threshold(self, sigma: float) -> int:
        """Smallest P0 with 1/((sigma-1)(P0-1)^(sigma-1)) < 0.9.

        Below that threshold the series log of L_P0 has modulus < 0.9 < pi,
        so it coincides with the principal log of the value.
        """
        t = (1.0 / (0.9 * (sigma - 1))) ** (1.0 / (sigma - 1))
        return math.floor(t) + 2

    def log_truncated_l(
        self, s: complex, chi: DirichletCharacter, p_min: int
    ) -> ValueWithBound:
        """The Dirichlet-series log of L_P(s, chi) = prod_{p>=P} (1 - chi(p) p^-s)^-1.

        Normalized to vanish as Re s -> infinity; computed branch-correctly by
        removing enough initial Euler factors that the remaining log has
        modulus below pi, then adding the removed factors back per-factor.
        """
        s = complex(s)
        key = (s, chi, p_min)
        out = self._logl_cache.get(key)
        if out is not None:
            return out
        if s.real <= 1:
            raise OutOfDomainError("log_truncated_l requires Re s > 1")
        if p_min < 2:
            raise InvalidArgumentError("log_truncated_l requires P >= 2")
        p0 = max(p_min, self._branch_threshold(s.real))
        if p0 > self.primes.limit:
            raise InvalidArgumentError(
                f"prime table limit {self.primes.limit} too small for threshold {p0}"
            )
        lval = self.dirichlet_l(s, chi)
        factor = 1 + 0j
        for p in self.primes.below(p0):
            factor *= 1 - chi(int(p)) * cmath.exp(-s * math.log(int(p)))
        main = ValueWithBound(lval.value * factor, lval.bound * abs(factor)).log()
        add_back = 0j
        for p in self.primes.in_range(p_min, p0 - 1):
            add_back += -cmath.log(1 - chi(int(p)) * cmath.exp(-s * math.log(int(p))))
        out = ValueWithBound(main.value + add_back, main.bound)
        self._logl_cache[key] = out
        return out
