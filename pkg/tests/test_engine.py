import cmath
import math

import numpy as np
import pytest

from apeuler import (
    APProductSpec,
    InvalidArgumentError,
    MultiTermSpec,
    OutOfDomainError,
    Polynomial,
    RationalProductSpec,
    ap_product,
    continuation_demo,
    multi_term_product,
    oracle_log_product,
    rational_product,
    y_p,
)
from apeuler.engine import _single_factor_log


def _ap_oracle(primes, s, q, a, p_min):
    spec = APProductSpec(s=s, q=q, a=a, p_min=p_min, depth=2)
    return oracle_log_product(spec, primes, primes.limit)


def test_y_p_zeta_inverse(ls6, primes_1e6):
    y = y_p(2 + 0j, 1, 1, 2, 10, ls6)
    orc = _ap_oracle(primes_1e6, 2 + 0j, 1, 1, 2)
    assert abs(y.value - orc.log_value) <= y.bound + orc.tail_bound
    # and the closed form: sum log(1 - p^-2) = -log zeta(2)
    assert abs(y.value - math.log(6 / math.pi**2)) <= y.bound + 2**-20


@pytest.mark.parametrize("q,a", [(4, 1), (4, 3), (5, 2)])
def test_y_p_progressions_against_oracle(ls6, primes_1e6, q, a):
    for s in (2 + 0j, 1.5 + 1j):
        y = y_p(s, q, a, 5, 10, ls6)
        orc = _ap_oracle(primes_1e6, s, q, a, 5)
        assert abs(y.value - orc.log_value) <= y.bound + orc.tail_bound


def test_y_p_residue_classes_sum_to_full_product(ls6):
    # summing over all invertible residues recovers the q = 1 value
    q, p_min, depth = 5, 7, 10
    s = 2 + 0j
    parts = [y_p(s, q, a, p_min, depth, ls6) for a in (1, 2, 3, 4)]
    whole = y_p(s, 1, 1, p_min, depth, ls6)
    tol = whole.bound + sum(p.bound for p in parts)
    tol += 2 * p_min ** (-depth * s.real)  # truncation depth mismatch headroom
    assert abs(sum(p.value for p in parts) - whole.value) <= tol + 1e-14


def test_y_p_validation():
    from apeuler import LSeries, sieve

    ls = LSeries(sieve(100))
    with pytest.raises(OutOfDomainError):
        y_p(1 + 0j, 1, 1, 2, 10, ls)
    with pytest.raises(InvalidArgumentError):
        y_p(2 + 0j, 4, 2, 2, 10, ls)
    with pytest.raises(InvalidArgumentError):
        y_p(2 + 0j, 1, 1, 1, 10, ls)


def test_ap_product_zeta_two(ls6):
    res = ap_product(APProductSpec(s=2 + 0j, q=1, a=1, p_min=2, depth=12), ls6)
    assert abs(res.value - 6 / math.pi**2) <= res.total_bound + 1e-13
    lo, hi = res.value_interval
    assert lo <= 6 / math.pi**2 <= hi


def test_ap_product_spec_validation():
    with pytest.raises(InvalidArgumentError):
        APProductSpec(s=1 + 0j).validate()
    with pytest.raises(InvalidArgumentError):
        APProductSpec(s=2 + 0j, q=6, a=3).validate()
    with pytest.raises(InvalidArgumentError):
        APProductSpec(s=2 + 0j, p_min=1).validate()
    with pytest.raises(InvalidArgumentError):
        APProductSpec(s=2 + 0j, depth=1).validate()


def test_rational_product_matches_ap_square(ls6, primes_1e6):
    # F = t^2, G = 1 gives the plain product at s = 2
    spec = RationalProductSpec(
        f=Polynomial.of([0, 0, 1]), g=Polynomial.of([1]), p_min=5, depth=10
    )
    res = rational_product(spec, ls6)
    ap = ap_product(APProductSpec(s=2 + 0j, p_min=5, depth=10), ls6)
    assert abs(res.log_value - ap.log_value) <= res.total_bound + ap.total_bound
    orc = oracle_log_product(spec, primes_1e6, 10**6)
    assert abs(res.log_value - orc.log_value) <= res.total_bound + orc.tail_bound


def test_rational_product_double_square(ls6, primes_1e6):
    spec = RationalProductSpec(
        f=Polynomial.of([0, 0, 2]), g=Polynomial.of([1]), p_min=5, depth=10
    )
    res = rational_product(spec, ls6)
    orc = oracle_log_product(spec, primes_1e6, 10**6)
    assert abs(res.log_value - orc.log_value) <= res.total_bound + orc.tail_bound


def test_rational_product_cubic_over_linear(ls6, primes_1e6):
    spec = RationalProductSpec(
        f=Polynomial.of([0, 0, 0, 1]),
        g=Polynomial.of([1, 1]),
        q=4,
        a=3,
        p_min=5,
        depth=10,
    )
    res = rational_product(spec, ls6)
    orc = oracle_log_product(spec, primes_1e6, 10**6)
    assert abs(res.log_value - orc.log_value) <= res.total_bound + orc.tail_bound


def test_rational_spec_validation():
    with pytest.raises(InvalidArgumentError):
        RationalProductSpec(f=Polynomial.of([0, 1]), g=Polynomial.of([1])).validate()
    with pytest.raises(InvalidArgumentError):
        RationalProductSpec(f=Polynomial.of([0, 0, 1]), g=Polynomial.of([2])).validate()
    with pytest.raises(InvalidArgumentError):
        # P below twice the certified inverse-root radius
        RationalProductSpec(
            f=Polynomial.of([0, 0, 1]), g=Polynomial.of([1]), p_min=3
        ).validate()


def test_multi_term_single_matches_ap_exactly(ls6):
    # k = 1 with a_1 = 1, u = 1, v = 0 must reduce to the plain product
    for s in (2 + 0j, 1.5 + 1j):
        for q, a in ((1, 1), (4, 3)):
            multi = multi_term_product(
                MultiTermSpec(
                    terms=((1 + 0j, 1.0, 0.0),), s=s, q=q, a=a, p_min=5, depth=8
                ),
                ls6,
            )
            plain = ap_product(
                APProductSpec(s=s, q=q, a=a, p_min=5, depth=8), ls6
            )
            assert multi.log_value == plain.log_value


def test_multi_term_two_terms_against_oracle(ls6, primes_1e6):
    spec = MultiTermSpec(
        terms=((-1 + 0j, 1.0, 0.0), (1 + 0j, 2.0, -1.0)),
        s=2 + 0j,
        p_min=10,
        depth=8,
    )
    res = multi_term_product(spec, ls6)
    orc = oracle_log_product(spec, primes_1e6, 10**6)
    assert abs(res.log_value - orc.log_value) <= res.total_bound + orc.tail_bound


def test_multi_term_complex_coefficient_against_oracle(ls6, primes_1e6):
    spec = MultiTermSpec(
        terms=((0.5 + 0.5j, 1.0, 0.0), (1 + 0j, 1.0, 1.0)),
        s=1.5 + 1j,
        q=3,
        a=2,
        p_min=7,
        depth=8,
    )
    res = multi_term_product(spec, ls6)
    orc = oracle_log_product(spec, primes_1e6, 10**6)
    assert abs(res.log_value - orc.log_value) <= res.total_bound + orc.tail_bound


def test_multi_term_spec_validation():
    with pytest.raises(InvalidArgumentError):
        MultiTermSpec(terms=(), s=2 + 0j).validate()
    with pytest.raises(OutOfDomainError):
        MultiTermSpec(terms=((1 + 0j, 1.0, -1.0),), s=1.5 + 0j, p_min=5).validate()
    with pytest.raises(InvalidArgumentError):
        # P below 2kA
        MultiTermSpec(
            terms=((3 + 0j, 1.0, 0.0),), s=2 + 0j, p_min=5, depth=8
        ).validate()


def test_single_factor_log_plus_sign(ls6, primes_1e6):
    # sum log(1 + p^-s) against the direct sum
    s = 2.5 + 0j
    res = _single_factor_log(-1 + 0j, s, 1, 1, 2, 10, ls6)
    ps = primes_1e6.primes.astype(float)
    direct = float(np.sum(np.log1p(ps**-2.5)))
    tail = 1.5 * 10**6 ** (1 - 2.5) / 1.5
    assert abs(res.value - direct) <= res.bound + tail


@pytest.mark.parametrize("seed", range(10))
def test_bound_containment_randomized(ls6, primes_1e6, seed):
    rng = np.random.default_rng(2000 + seed)
    q = int(rng.choice([1, 3, 4, 5, 8]))
    units = [n for n in range(1, q + 1) if math.gcd(n, q) == 1]
    a = int(rng.choice(units))
    s = complex(1.5 + 1.5 * rng.random(), 2 * rng.random() - 1)
    p_min = int(rng.choice([2, 5, 20, 50]))
    depth = int(rng.integers(4, 12))
    spec = APProductSpec(s=s, q=q, a=a, p_min=p_min, depth=depth)
    res = ap_product(spec, ls6)
    orc = oracle_log_product(spec, primes_1e6, 10**6)
    assert abs(res.log_value - orc.log_value) <= res.total_bound + orc.tail_bound


def test_depth_refinement_within_bounds(ls6):
    spec4 = APProductSpec(s=1.5 + 1j, q=5, a=2, p_min=5, depth=4)
    spec8 = APProductSpec(s=1.5 + 1j, q=5, a=2, p_min=5, depth=8)
    r4 = ap_product(spec4, ls6)
    r8 = ap_product(spec8, ls6)
    assert abs(r4.log_value - r8.log_value) <= r4.total_bound + r8.total_bound
    assert r8.total_bound < r4.total_bound


def test_continuation_demo_at_three(ls6, primes_1e6):
    res = continuation_demo(3 + 0j, 24, ls6, depth=8)
    ps = primes_1e6.primes.astype(float)
    terms = ps**-3.0 - ps**-5.0
    direct = complex(np.sum(np.log1p(terms)))
    tail = 1.5 * 2 * 10**6 ** (1 - 3.0) / 2.0
    assert abs(res.value - cmath.exp(direct)) <= res.bound + 3 * tail


def test_continuation_demo_domain():
    from apeuler import LSeries, sieve

    ls = LSeries(sieve(100))
    with pytest.raises(OutOfDomainError):
        continuation_demo(1 + 0j, 10, ls)
    with pytest.raises(OutOfDomainError):
        continuation_demo(0.9 + 0j, 10, ls)
    with pytest.raises(InvalidArgumentError):
        continuation_demo(2 + 0j, 2, ls)
