import math
from fractions import Fraction

import pytest

from apeuler import character_group, euler_phi


def test_modulus_one():
    grp = character_group(1)
    assert len(grp) == 1
    chi = grp.principal
    assert all(chi(n) == 1 for n in range(10))


def test_modulus_four():
    grp = character_group(4)
    assert len(grp) == 2
    nonprincipal = [c for c in grp.characters if not c.is_principal]
    assert len(nonprincipal) == 1
    assert nonprincipal[0](3) == pytest.approx(-1)
    assert nonprincipal[0](2) == 0


def test_modulus_five_order_four():
    grp = character_group(5)
    assert len(grp) == 4
    quartic = [c for c in grp.characters if c.order == 4]
    assert len(quartic) == 2
    for chi in quartic:
        assert chi.angle(2) in (Fraction(1, 4), Fraction(3, 4))  # chi(2) = +-i


def test_char_pow():
    grp = character_group(5)
    chi = next(c for c in grp.characters if c.order == 4)
    assert (chi**0).is_principal
    assert (chi**2).order == 2
    grp4 = character_group(4)
    chi4 = next(c for c in grp4.characters if not c.is_principal)
    assert (chi4**2).is_principal


@pytest.mark.parametrize("q", list(range(1, 31)))
def test_orthogonality_exact(q):
    grp = character_group(q)
    assert len(grp) == euler_phi(q)
    units = [n for n in range(q) if math.gcd(n, q) == 1] or [0]
    for a in units:
        for p in units:
            if (p - a) % q == 0:
                # every chibar(a) chi(p) must be exactly 1 (angle 0)
                for chi in grp.characters:
                    assert (chi.angle(p) - chi.angle(a)) % 1 == 0
            else:
                total = sum(chi(a).conjugate() * chi(p) for chi in grp.characters)
                assert abs(total) < 1e-9


@pytest.mark.parametrize("q", [1, 3, 4, 5, 8, 9, 12, 16, 24])
def test_complete_multiplicativity_exact(q):
    grp = character_group(q)
    units = [n for n in range(q) if math.gcd(n, q) == 1] or [0]
    for chi in grp.characters:
        for m in units:
            for n in units:
                assert chi.angle(m * n) == (chi.angle(m) + chi.angle(n)) % 1


@pytest.mark.parametrize("q", [1, 4, 5, 8, 15, 16])
def test_power_closure_and_order(q):
    grp = character_group(q)
    members = set(grp.characters)
    for chi in grp.characters:
        assert (chi**chi.order).is_principal
        for d in range(1, chi.order):
            if (chi**d).is_principal:
                pytest.fail(f"order not minimal for a character mod {q}")
        for d in range(2 * chi.order + 1):
            assert chi**d in members


def test_zero_off_units():
    grp = character_group(12)
    for chi in grp.characters:
        for n in range(12):
            if math.gcd(n, 12) != 1:
                assert chi(n) == 0
            else:
                assert abs(abs(chi(n)) - 1) < 1e-15


def test_value_at_one():
    for q in (1, 2, 7, 8, 36):
        for chi in character_group(q).characters:
            assert chi(1) == 1
