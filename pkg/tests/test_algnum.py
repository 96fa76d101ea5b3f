import random
from fractions import Fraction as Fr

import pytest

from okbodies import SqrtField, rational_sqrt


def rnd_elem(field, rng, rads):
    x = field.rational(Fr(rng.randint(-9, 9), rng.randint(1, 9)))
    for r in rads:
        c = Fr(rng.randint(-9, 9), rng.randint(1, 9))
        x = x + c * field.sqrt(r)
    return x


def test_rational_sqrt():
    assert rational_sqrt(Fr(49, 625)) == Fr(7, 25)
    assert rational_sqrt(Fr(2)) is None
    assert rational_sqrt(Fr(0)) == 0


def test_dependent_radicands_collapse():
    f = SqrtField()
    assert (f.sqrt(8) - 2 * f.sqrt(2)).is_zero()
    assert (f.sqrt(Fr(1, 2)) * f.sqrt(2)).as_rational() == 1
    assert (f.sqrt(6) - f.sqrt(2) * f.sqrt(3)).is_zero()
    assert len(f.radicands) <= 2


def test_field_axioms_random():
    rng = random.Random(7)
    rads = [2, 3, 10]
    for _ in range(60):
        f = SqrtField()
        x, y, z = (rnd_elem(f, rng, rads) for _ in range(3))
        assert ((x + y) * z - (x * z + y * z)).is_zero()
        assert (x * y - y * x).is_zero()
        if not x.is_zero():
            assert (x * x.inverse() - 1).is_zero()
            assert ((y / x) * x - y).is_zero()


def test_sign_soundness_against_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 200
    rng = random.Random(12)
    rads = [2, 5, 13]
    for _ in range(1000):
        f = SqrtField()
        x = rnd_elem(f, rng, rads)
        approx = mp.mpf(0)
        for subset, coeff in x.coords.items():
            term = mp.mpf(coeff.numerator) / coeff.denominator
            for i in subset:
                r = f.radicands[i]
                term *= mp.sqrt(mp.mpf(r.numerator) / r.denominator)
            approx += term
        got = x.sign()
        if abs(approx) > mp.mpf(10) ** -150:
            assert got == (1 if approx > 0 else -1)
        else:
            assert got == 0


def test_exact_zero_detection():
    f = SqrtField()
    a = f.sqrt(2) + f.sqrt(3)
    # (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 exactly
    assert (a * a - (5 + 2 * f.sqrt(6))).is_zero()
    assert a.sign() == 1
    assert (a - a).sign() == 0


def test_comparisons_with_rationals():
    f = SqrtField()
    r10 = f.sqrt(10)
    assert r10 > 3
    assert r10 < Fr(19, 6)
    assert Fr(3) < r10
    assert (3 * r10) < 10  # 9*10 < 100
    assert not (r10 < r10)


def test_cross_field_comparison():
    f1, f2 = SqrtField(), SqrtField()
    a = f1.sqrt(2)
    b = f2.sqrt(3)
    assert a < b
    assert (b - a).sign() == 1


def test_powers_and_division():
    f = SqrtField()
    x = 1 + f.sqrt(2)
    assert (x ** 2 - (3 + 2 * f.sqrt(2))).is_zero()
    assert (x ** -1 - (f.sqrt(2) - 1)).is_zero()  # 1/(1+sqrt2) = sqrt2 - 1


def test_json_shape():
    f = SqrtField()
    x = Fr(7, 25) + 3 * f.sqrt(10)
    blob = x.to_json()
    assert {"coeff": "7/25", "radicand": "1"} in blob["terms"]
    assert {"coeff": "3", "radicand": "10"} in blob["terms"]
