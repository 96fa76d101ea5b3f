import json
import random
from fractions import Fraction as Fr

import pytest

from okbodies import (DimensionMismatch, DivClass, SurfaceModel,
                      canonical_class, intersect, symmetrize)


def rnd_class(rng, s, den=7):
    return DivClass(Fr(rng.randint(-20, 20), rng.randint(1, den)),
                    [Fr(rng.randint(-20, 20), rng.randint(1, den))
                     for _ in range(s)])


def test_hyperplane_square():
    H = SurfaceModel(4).hyperplane
    assert intersect(H, H) == 1


def test_canonical_squares():
    assert canonical_class(SurfaceModel(0)).self_intersection() == 9
    assert canonical_class(SurfaceModel(1)).self_intersection() == 8
    assert canonical_class(SurfaceModel(6)).self_intersection() == 3
    assert canonical_class(SurfaceModel(9)).self_intersection() == 0


def test_fractional_self_intersection():
    D = DivClass(1, [Fr(2, 5)] * 6)
    assert D.self_intersection() == Fr(1, 25)


def test_pairing_symmetric_bilinear():
    rng = random.Random(101)
    for _ in range(50):
        s = rng.randint(0, 6)
        A, B, C = (rnd_class(rng, s) for _ in range(3))
        a = Fr(rng.randint(-9, 9), rng.randint(1, 5))
        b = Fr(rng.randint(-9, 9), rng.randint(1, 5))
        assert intersect(A, B) == intersect(B, A)
        assert intersect(A.scale(a) + B.scale(b), C) == \
            a * intersect(A, C) + b * intersect(B, C)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        intersect(DivClass(1, [0]), DivClass(1, [0, 0]))


def test_exceptional_and_sum():
    S = SurfaceModel(3)
    E1 = S.exceptional(1)
    assert E1.self_intersection() == -1
    assert intersect(E1, S.hyperplane) == 0
    assert intersect(S.sum_exceptional, S.sum_exceptional) == -3
    assert S.sum_exceptional == E1 + S.exceptional(2) + S.exceptional(3)


def test_symmetrize_examples():
    assert symmetrize(DivClass(1, [1, 0])) == DivClass(2, [1, 1])
    assert symmetrize(DivClass(3, [2, 1, 1, 1, 1, 1, 1])) == DivClass(21, [8] * 7)


def test_symmetrize_homogeneous_same_ray():
    D = DivClass(2, [Fr(1, 3)] * 5)
    G = symmetrize(D)
    assert G == D.scale(5)
    GG = symmetrize(G)
    # lies on the same ray as symmetrize(D)
    assert GG.scale(Fr(G.d)) == G.scale(Fr(GG.d))


def test_symmetrize_preserves_seshadri_quotient():
    # (L . Gamma) / (s m) == (d - alpha M) / m for L = H - alpha E
    rng = random.Random(33)
    for _ in range(40):
        s = rng.randint(1, 8)
        d = rng.randint(1, 9)
        mults = [rng.randint(0, 4) for _ in range(s)]
        alpha = Fr(rng.randint(0, 5), rng.randint(1, 9))
        m = Fr(rng.randint(1, 9), rng.randint(1, 4))
        C = DivClass(d, mults)
        L = SurfaceModel(s).hyperplane - SurfaceModel(s).sum_exceptional.scale(alpha)
        G = symmetrize(C)
        M = sum(mults)
        assert intersect(L, G) / (s * m) == (d - alpha * M) / m


def test_json_roundtrip_and_convention():
    # H - (2/5)E serializes as ["1", "-2/5", ...]: E_i-basis coefficients
    D = DivClass(1, [Fr(2, 5)] * 6)
    blob = D.to_json()
    assert blob[0] == "1" and blob[1] == "-2/5"
    assert DivClass.from_json(blob) == D
    assert DivClass.from_json(json.loads(json.dumps(blob))) == D
    E1 = SurfaceModel(2).exceptional(1)
    assert E1.to_json() == ["0", "1", "0"]


def test_float_rejected():
    with pytest.raises(TypeError):
        DivClass(1.5, [0])
    with pytest.raises(TypeError):
        DivClass(1, [0.25])
