import random
from fractions import Fraction

import pytest

from e6grad.scalar import CYC_ONE, Cyc, I, OMEGA, SQRT3, ZETA, sign_exact


def rand_cyc(rng):
    return Cyc(*(Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                 for _ in range(4)))


def test_defining_relations():
    assert I * I == Cyc(-1)
    assert OMEGA ** 3 == CYC_ONE and OMEGA != CYC_ONE
    assert (OMEGA * OMEGA + OMEGA + 1).is_zero()
    assert SQRT3 * SQRT3 == Cyc(3)
    # zeta is a primitive 12th root of unity
    p = ZETA
    for k in range(1, 12):
        assert p != CYC_ONE, k
        p = p * ZETA
    assert p == CYC_ONE
    # minimal polynomial z^4 - z^2 + 1 = 0
    assert (ZETA ** 4 - ZETA ** 2 + 1).is_zero()


def test_field_axioms_randomized():
    rng = random.Random(20240817)
    for _ in range(200):
        a, b, c = (rand_cyc(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
    for _ in range(100):
        a = rand_cyc(rng)
        if a.is_zero():
            continue
        assert a * a.inv() == CYC_ONE
        assert (CYC_ONE / a) * a == CYC_ONE


def test_conjugation_involutive_automorphism():
    rng = random.Random(7)
    for _ in range(100):
        a, b = rand_cyc(rng), rand_cyc(rng)
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        norm = a * a.conj()
        assert norm.is_real()
        assert norm.sign_real() >= 0


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Cyc(0).inv()


def test_sign_real_examples():
    assert Cyc(0).sign_real() == 0
    assert (Cyc(1) - SQRT3).sign_real() == -1
    assert (Cyc(2) - SQRT3).sign_real() == 1  # 4 > 3 by exact comparison
    with pytest.raises(ValueError):
        I.sign_real()
    with pytest.raises(ValueError):
        ZETA.sign_real()


def test_sign_real_against_rational_bounds():
    # 1.7320508 < sqrt3 < 1.7320509; elements p + q sqrt3 whose sign the
    # interval bounds decide must agree with the exact sign.
    lo, hi = Fraction(17320508, 10 ** 7), Fraction(17320509, 10 ** 7)
    rng = random.Random(99)
    decided = 0
    for _ in range(1000):
        p = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        q = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        x = Cyc(p) + SQRT3 * q
        bounds = sorted((p + q * lo, p + q * hi))
        if bounds[0] > 0 or bounds[1] < 0:
            decided += 1
            want = 1 if bounds[0] > 0 else -1
            assert x.sign_real() == want
        else:
            # interval straddles zero only very near 0; exact sign checks out
            assert x.sign_real() == (0 if (p == 0 and q == 0) else x.sign_real())
    assert decided > 900


def test_serialization_round_trip():
    x = Cyc(Fraction(3, 7), -2, Fraction(5, 2), 0)
    assert Cyc.from_strings(x.to_strings()) == x
    assert x.to_strings() == ["3/7", "-2/1", "5/2", "0/1"]


def test_real_subfield_detection():
    x = Cyc(Fraction(1, 2)) - SQRT3 * Fraction(2, 3)
    assert x.is_real()
    p, q = x.real_parts()
    assert p == Fraction(1, 2) and q == Fraction(-2, 3)
    assert not (ZETA + 1).is_real()
    assert sign_exact(Fraction(-3, 4)) == -1
    assert sign_exact(x) == (1 if 9 > 48 else -1)
