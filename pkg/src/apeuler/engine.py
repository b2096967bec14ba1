"""The headline computations: truncated Euler products over primes in progressions.

Three product families are supported, all returning a computed log exponent
together with a total rigorous truncation bound:

  * ``ap_product``       -- prod_{p >= P, p = a mod q} (1 - p^-s)
  * ``rational_product`` -- prod (1 - F(1/p)/G(1/p)) for complex polynomials
  * ``multi_term_product`` -- prod (1 - sum_l a_l p^-(u_l s + v_l))

plus ``continuation_demo`` which rebuilds prod_p (1 + p^-s - p^-(2s-1)) from
its necklace factorization and three zeta front factors.

Sign convention: ``y_p`` approximates sum_{p >= P, p = a mod q} log(1 - p^-s)
itself (it tends to 0 as P grows), so every product is exp of a plain sum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .arith import divisors, mobius
from .characters import character_group
from .errors import InvalidArgumentError, OutOfDomainError
from .lseries import LSeries, ValueWithBound
from .witt import (
    Polynomial,
    beta_bound,
    kappa,
    lambert_log_expand,
    multi_indices,
    necklace_m,
)

# Terms whose certified magnitude falls below this are skipped (and their
# majorant added to the bound) instead of being evaluated.
_SKIP_EPS = 1e-18


@dataclass(frozen=True)
class APProductSpec:
    s: complex
    q: int = 1
    a: int = 1
    p_min: int = 2
    depth: int = 10  # the truncation depth L

    def validate(self) -> None:
        if complex(self.s).real <= 1:
            raise InvalidArgumentError("product requires Re s > 1")
        if self.q < 1:
            raise InvalidArgumentError("modulus q must be >= 1")
        if math.gcd(self.a, self.q) != 1:
            raise InvalidArgumentError("residue a must be invertible mod q")
        if self.p_min < 2:
            raise InvalidArgumentError("P must be >= 2")
        if self.depth < 2:
            raise InvalidArgumentError("L must be >= 2")


@dataclass(frozen=True)
class RationalProductSpec:
    f: Polynomial
    g: Polynomial
    q: int = 1
    a: int = 1
    p_min: int = 2
    depth: int = 10

    def beta(self) -> float:
        return max(beta_bound(self.g), beta_bound(self.g - self.f))

    def validate(self) -> None:
        if self.g.coeff(0) != 1:
            raise InvalidArgumentError("rational product requires G(0) = 1")
        if self.f.coeff(0) != 0 or self.f.coeff(1) != 0:
            raise InvalidArgumentError("rational product requires F(0) = F'(0) = 0")
        if self.q < 1 or math.gcd(self.a, self.q) != 1:
            raise InvalidArgumentError("residue a must be invertible mod q")
        if self.depth < 2:
            raise InvalidArgumentError("L must be >= 2")
        if self.p_min < 2 * self.beta():
            raise InvalidArgumentError(
                f"P must be >= 2*beta = {2 * self.beta():g} for this F, G"
            )


@dataclass(frozen=True)
class MultiTermSpec:
    terms: tuple[tuple[complex, float, float], ...]  # (a_l, u_l, v_l)
    s: complex
    q: int = 1
    a: int = 1
    p_min: int = 2
    depth: int = 10

    @property
    def k(self) -> int:
        return len(self.terms)

    @property
    def coeff_cap(self) -> float:
        """A = max(1, max |a_l|)."""
        return max(1.0, max(abs(al) for al, _, _ in self.terms))

    def validate(self) -> None:
        s = complex(self.s)
        if s.real <= 1:
            raise InvalidArgumentError("product requires Re s > 1")
        if not self.terms:
            raise InvalidArgumentError("at least one term is required")
        if self.q < 1 or math.gcd(self.a, self.q) != 1:
            raise InvalidArgumentError("residue a must be invertible mod q")
        if self.depth < max(2, self.k):
            raise InvalidArgumentError("L must be >= max(2, k)")
        if self.p_min < 2 * self.k * self.coeff_cap:
            raise InvalidArgumentError(
                f"P must be >= 2kA = {2 * self.k * self.coeff_cap:g}"
            )
        for al, u, v in self.terms:
            if u * s.real + v <= 1:
                raise OutOfDomainError(
                    "each exponent must satisfy u*Re(s) + v > 1"
                )


@dataclass(frozen=True)
class ProductResult:
    """Computed exponent and aggregated bound; value = exp(log_value)."""

    log_value: complex
    total_bound: float

    @property
    def value(self) -> complex:
        return cmath.exp(self.log_value)

    @property
    def value_interval(self) -> tuple[float, float]:
        """Multiplicative enclosure of |value|: |value| * e^(+-total_bound)."""
        r = abs(self.value)
        return (r * math.exp(-self.total_bound), r * math.exp(self.total_bound))


def _y_magnitude_majorant(sigma: float, p_min: int, depth: int) -> float:
    """Crude certified bound on |y_p|: L / ((sigma-1) P^(sigma-1))."""
    e = (sigma - 1) * math.log(p_min)
    if e > 700:
        return 0.0
    return depth / ((sigma - 1) * math.exp(e))


def y_p(
    s: complex, q: int, a: int, p_min: int, depth: int, ls: LSeries
) -> ValueWithBound:
    """Truncated approximation to sum_{p >= P, p = a mod q} log(1 - p^-s).

    Character decomposition with a Moebius unsieving over powers; the weights
    attached to equal character powers are combined before any L-evaluation so
    exact cancellations (notably all depths > 1 at q = 1) cost nothing.
    """
    s = complex(s)
    if s.real <= 1:
        raise OutOfDomainError("y_p requires Re s > 1")
    if math.gcd(a, q) != 1:
        raise InvalidArgumentError("residue a must be invertible mod q")
    if p_min < 2 or depth < 2:
        raise InvalidArgumentError("P >= 2 and L >= 2 required")
    grp = character_group(q)
    phi = len(grp)
    total = 0j
    bound = 0.0
    for ell in range(1, depth + 1):
        weights: dict = {}
        for d in divisors(ell):
            mu = mobius(d)
            if not mu:
                continue
            for chi in grp.characters:
                w = mu * chi(a).conjugate()
                key = chi**d
                weights[key] = weights.get(key, 0j) + w
        for chi_pow, w in weights.items():
            if w == 0:
                continue
            lt = ls.log_truncated_l(ell * s, chi_pow, p_min)
            total += w * lt.value / (ell * phi)
            bound += abs(w) * lt.bound / (ell * phi)
    return ValueWithBound(-total, bound)


def ap_product(spec: APProductSpec, ls: LSeries) -> ProductResult:
    """prod_{p >= P, p = a mod q} (1 - p^-s) with structural bound P^(-L Re s)."""
    spec.validate()
    s = complex(spec.s)
    y = y_p(s, spec.q, spec.a, spec.p_min, spec.depth, ls)
    structural = math.exp(-spec.depth * s.real * math.log(spec.p_min))
    return ProductResult(y.value, y.bound + structural)


def rational_product(spec: RationalProductSpec, ls: LSeries) -> ProductResult:
    """prod_{p >= P, p = a mod q} (1 - F(1/p)/G(1/p))."""
    spec.validate()
    beta = spec.beta()
    depth = spec.depth
    j_max = 2 * depth  # the series cut that makes the stated bound applicable
    coeffs = lambert_log_expand(spec.f, spec.g, j_max)
    total = 0j
    bound = 0.0
    for j, c in coeffs:
        if j < 2 or c == 0:
            continue
        y = y_p(complex(j), spec.q, spec.a, spec.p_min, depth, ls)
        total += c * y.value
        bound += abs(c) * y.bound
    deg = max((spec.g - spec.f).degree, spec.g.degree)
    bound += 8 * deg * beta**2 * (beta / spec.p_min) ** (2 * depth)
    return ProductResult(total, bound)


def multi_term_product(spec: MultiTermSpec, ls: LSeries) -> ProductResult:
    """prod_{p >= P, p = a mod q} (1 - sum_l a_l p^-(u_l s + v_l)).

    Necklace factorization into single-term products, each handled through the
    telescoping kappa expansion and y_p; multi-indices are enumerated in
    lexicographic order for reproducibility.
    """
    spec.validate()
    s = complex(spec.s)
    k = spec.k
    cap = spec.coeff_cap
    depth = spec.depth
    inner = depth  # truncation of the kappa sum, fixed with the stated bound
    total = 0j
    bound = 0.0
    for m in multi_indices(k, depth):
        mm = necklace_m(m)
        if mm == 0:
            continue
        c = 1 + 0j
        for (al, _, _), ml in zip(spec.terms, m):
            c *= al**ml
        if c == 0:
            continue
        w = sum(ml * (u * s + v) for (_, u, v), ml in zip(spec.terms, m))
        for f in range(1, inner + 1):
            kf = kappa(c, f)
            if kf == 0:
                continue
            coef = mm * kf / f
            sf = f * w
            majorant = _y_magnitude_majorant(sf.real, spec.p_min, depth)
            if abs(coef) * majorant < _SKIP_EPS:
                bound += abs(coef) * majorant
                continue
            y = y_p(sf, spec.q, spec.a, spec.p_min, depth, ls)
            total += coef * y.value
            bound += abs(coef) * y.bound
        # kappa tail beyond the inner cut: |kappa_f(c)/f| <= max(1, |c|)^f
        ac = max(1.0, abs(c))
        for f in range(inner + 1, inner + 200):
            t = abs(mm) * ac**f * _y_magnitude_majorant(f * w.real, spec.p_min, depth)
            bound += t
            if t < 1e-300:
                break
    structural = (
        2**k
        * cap**depth
        / (math.factorial(k) * spec.p_min**depth)
        * ((depth + k) ** k + 1 + math.log(depth) + 3 * k * cap / depth)
    )
    return ProductResult(total, bound + structural)


def _single_factor_log(
    c: complex, w: complex, q: int, a: int, p_min: int, depth: int, ls: LSeries
) -> ValueWithBound:
    """sum_{p >= P, p = a mod q} log(1 - c p^-w) via the kappa expansion, |c| <= 1."""
    total = 0j
    bound = 0.0
    for f in range(1, depth + 1):
        kf = kappa(c, f)
        if kf == 0:
            continue
        coef = kf / f
        sf = f * w
        majorant = _y_magnitude_majorant(sf.real, p_min, depth)
        if abs(coef) * majorant < _SKIP_EPS:
            bound += abs(coef) * majorant
            continue
        y = y_p(sf, q, a, p_min, depth, ls)
        total += coef * y.value
        bound += abs(coef) * y.bound + abs(coef) * math.exp(
            -depth * sf.real * math.log(p_min)
        )
    # kappa tail: |kappa_f(c)/f| <= max(1, |c|)^f = 1 here
    for f in range(depth + 1, depth + 200):
        t = _y_magnitude_majorant(f * w.real, p_min, depth)
        bound += t
        if t < 1e-300:
            break
    return ValueWithBound(total, bound)


def _demo_tail_majorant(sigma: float, n_cut: int) -> float:
    """Bound on the neglected necklace factors with m1 + 2*m2 > n_cut.

    Each factor log is at most 4.5 * M(m) * 2^(-Re w) with
    Re w = m1*sigma + m2*(2*sigma - 1) and M(m) <= 2^N, giving a double
    geometric series in x = 2^(1-sigma), y = 2^(2-2*sigma).
    """
    x = 2.0 ** (1 - sigma)
    y = 2.0 ** (2 - 2 * sigma)
    acc = 0.0
    m2 = 1
    while True:
        lo = max(1, n_cut - 2 * m2 + 1)
        term = y**m2 * x**lo / (1 - x)
        acc += term
        if term < 1e-300 or (m2 > n_cut and term < 1e-20 * acc):
            break
        m2 += 1
        if m2 > 100000:
            break
    return 4.5 * acc


def continuation_demo(
    s: complex, n_max: int, ls: LSeries, depth: int = 10
) -> ValueWithBound:
    """prod_{p >= 2} (1 + p^-s - p^-(2s-1)) rebuilt from its necklace factorization.

    The (1,0) and (0,1) indices contribute prod (1 + p^-s) = zeta(s)/zeta(2s)
    and prod (1 - p^-(2s-1)) = 1/zeta(2s-1), absorbed as closed-form front
    factors; the remaining double product runs over m1, m2 >= 1 with
    m1 + 2*m2 <= n_max.  All three zeta arguments must have real part > 1,
    which confines the demo to Re s > 1.
    """
    s = complex(s)
    for arg, name in ((2 * s - 1, "2s-1"), (2 * s, "2s"), (s, "s")):
        if arg.real <= 1:
            raise OutOfDomainError(f"zeta argument {name} has real part <= 1")
    if n_max < 3:
        raise InvalidArgumentError("n_max must be >= 3")
    z1 = ls.zeta(2 * s - 1).log()
    z2 = ls.zeta(2 * s).log()
    z3 = ls.zeta(s).log()
    log_total = z3 + z1.scaled(-1) + z2.scaled(-1)
    acc = log_total.value
    bnd = log_total.bound
    for m1 in range(1, n_max - 1):
        for m2 in range(1, (n_max - m1) // 2 + 1):
            mm = necklace_m((m1, m2))
            if mm == 0:
                continue
            c = -1.0 if m1 % 2 else 1.0
            w = (m1 + 2 * m2) * s - m2
            piece = _single_factor_log(c, w, 1, 1, 2, depth, ls)
            acc += mm * piece.value
            bnd += abs(mm) * piece.bound
    bnd += _demo_tail_majorant(s.real, n_max)
    v = cmath.exp(acc)
    return ValueWithBound(v, abs(v) * math.expm1(min(bnd, 700.0)))
