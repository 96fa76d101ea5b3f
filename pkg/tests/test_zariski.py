import itertools
import random
from fractions import Fraction as Fr

import pytest

from okbodies import (CatalogInsufficient, DivClass, NotNef,
                      NotPseudoEffective, SurfaceModel, decompose, intersect,
                      is_nef, nef_threshold, pseff_threshold, walk_ray,
                      UNBOUNDED)
from okbodies.linalg import is_negative_definite, solve

from conftest import catalog


def H(s):
    return DivClass(1, [0] * s)


def EE(s):
    return DivClass(0, [-1] * s)


# -- exact linear algebra ------------------------------------------------------


def test_solve_and_minors():
    g = [[-1, 0], [0, -1]]
    (sol,) = solve(g, [[2, 3]])
    assert sol == [-2, -3]
    assert is_negative_definite([[-1, 1], [1, -2]])
    assert not is_negative_definite([[-1, 1], [1, -1]])  # singular
    assert not is_negative_definite([[1]])


# -- decompose -----------------------------------------------------------------


def test_decompose_nef_input():
    z = decompose(H(4), catalog(4))
    assert z.positive == H(4) and z.negative == ()


def test_decompose_forced_exceptional():
    # H + E1 at s=1: (H+E).E = -1 forces N = E1
    z = decompose(DivClass(1, [-1]), catalog(1))
    assert z.positive == H(1)
    assert z.negative == ((DivClass(0, [-1]), 1),)


def brute_force_decomposition(D, cat, max_support=6):
    """Oracle: search all supports of bounded size among curves meeting D
    non-positively, solve each Gram system, keep the unique valid one."""
    pool = [c for c in cat if intersect(D, c) <= 0]
    found = []
    for size in range(0, max_support + 1):
        for sub in itertools.combinations(pool, size):
            gram = [[intersect(a, b) for b in sub] for a in sub]
            if sub and not is_negative_definite(gram):
                continue
            if sub:
                (coeffs,) = solve(gram, [[intersect(D, c) for c in sub]])
            else:
                coeffs = []
            if any(a <= 0 for a in coeffs):
                continue
            P = D
            for c, a in zip(sub, coeffs):
                P = P - c.scale(a)
            if P.dot(P) < 0:
                continue
            if all(intersect(P, c) >= 0 for c in cat):
                found.append((P, tuple(zip(sub, coeffs))))
    return found


def test_decompose_six_point_slice_against_brute_force():
    # the slice (49/50)H - (2/5)E of the six-point fixture
    D = DivClass(Fr(49, 50), [Fr(2, 5)] * 6)
    cat = catalog(6)
    z = decompose(D, cat)
    assert z.positive == DivClass(Fr(1, 2), [Fr(1, 5)] * 6)
    assert len(z.negative) == 6
    assert all(a == Fr(1, 25) for _, a in z.negative)
    assert all(int(c.d) == 2 for c, _ in z.negative)
    oracle = brute_force_decomposition(D, cat)
    assert len(oracle) == 1
    P, neg = oracle[0]
    assert P == z.positive and dict(neg) == dict(z.negative)


def test_decomposition_invariants_random():
    rng = random.Random(2024)
    cat = catalog(5)
    checked = 0
    while checked < 25:
        D = DivClass(rng.randint(1, 5),
                     [Fr(rng.randint(-2, 14), 8) for _ in range(5)])
        try:
            z = decompose(D, cat)
        except NotPseudoEffective:
            continue
        checked += 1
        # exactness of the splitting
        assert z.positive + z.negative_part() == D
        # orthogonality and positivity
        for c, a in z.negative:
            assert a > 0
            assert intersect(z.positive, c) == 0
        # nefness of P against the whole catalog
        assert all(intersect(z.positive, c) >= 0 for c in cat)
        assert z.volume >= 0
        # negative definite Gram
        sup = [c for c, _ in z.negative]
        if sup:
            assert is_negative_definite([[intersect(a, b) for b in sup] for a in sup])


def test_decompose_order_invariance():
    D = DivClass(Fr(49, 50), [Fr(2, 5)] * 6)
    cat = catalog(6)
    base = decompose(D, cat)
    rng = random.Random(11)
    entries = list(cat.entries)
    for _ in range(5):
        rng.shuffle(entries)
        shuffled = type(cat)(cat.s, cat.d_max, tuple(entries), cat.complete)
        z = decompose(D, shuffled)
        assert z.positive == base.positive
        assert dict(z.negative) == dict(base.negative)


def test_not_pseudoeffective():
    with pytest.raises(NotPseudoEffective):
        decompose(DivClass(-1, [0] * 3), catalog(3))
    with pytest.raises(NotPseudoEffective):
        decompose(DivClass(0, [1]), catalog(1))  # -E1
    with pytest.raises(NotPseudoEffective):
        # beyond the pseudoeffective threshold of the six-point fixture ray
        decompose(DivClass(1, list([Fr(2, 5)] * 6) + [Fr(1, 5) + Fr(1, 100)]),
                  catalog(7))


def test_catalog_insufficient_signal():
    # at s=9 a truncated catalog must refuse walks whose support leans on its
    # degree frontier: here the line through P1, P2 enters at t = 1/2
    cat = catalog(9, 1)  # only exceptionals and lines
    assert not cat.complete
    with pytest.raises(CatalogInsufficient):
        pseff_threshold(H(9), DivClass(0, [-1, -1] + [0] * 7), cat)


# -- thresholds ----------------------------------------------------------------


def test_nef_threshold_examples():
    assert nef_threshold(H(1), SurfaceModel(1).exceptional(1), catalog(1)) == 1
    assert nef_threshold(H(5), EE(5), catalog(5)) == Fr(2, 5)
    assert nef_threshold(H(7), EE(7), catalog(7)) == Fr(3, 8)


def test_nef_threshold_requires_nef():
    with pytest.raises(NotNef):
        nef_threshold(DivClass(1, [-1]), EE(1), catalog(1))


def test_nef_threshold_unbounded():
    # moving away from every wall: A - t*(-H) stays nef forever
    assert nef_threshold(H(2), DivClass(-1, [0, 0]), catalog(2)) is UNBOUNDED


def test_pseff_threshold_examples():
    assert pseff_threshold(H(1), SurfaceModel(1).exceptional(1), catalog(1)) == 1
    assert pseff_threshold(H(5), EE(5), catalog(5)) == Fr(1, 2)
    # six-point fixture against a fresh exceptional direction
    D7 = DivClass(1, [Fr(2, 5)] * 6 + [0])
    F = DivClass(0, [0] * 6 + [-1])
    assert pseff_threshold(D7, F, catalog(7)) == Fr(1, 5)
    assert Fr(1, 5) <= Fr(4, 15)  # consistent with the classical upper bound


def test_pseff_threshold_irrational_is_exact():
    # at s = 9 the effective cone is no longer polyhedral: the ray
    # (4; 2, 1^8) - t*H exits through the round boundary at 4 - 2*sqrt(3),
    # strictly before every catalog wall
    from okbodies import AlgNum
    D = DivClass(4, [2] + [1] * 8)
    t = pseff_threshold(D, H(9), catalog(9))
    assert isinstance(t, AlgNum)
    w = walk_ray(D, H(9), catalog(9))
    # the quartic (4; 3, 1^8) enters the support at t = 1/2 first
    assert w.breakpoints == (0, Fr(1, 2))
    assert w.supports[1] == frozenset({DivClass(4, [3] + [1] * 8)})
    c0, c1, c2 = w.end_quadratic
    assert (c0 + c1 * t + c2 * t * t).is_zero()
    # t = 12/17 - sqrt(32)/34 exactly
    f = t.field
    assert (t - (Fr(12, 17) - f.sqrt(32) / 34)).is_zero()


# -- walks ---------------------------------------------------------------------


def test_walk_two_chambers_small_s():
    for s in (5, 6, 7, 8):
        w = walk_ray(H(s), EE(s), catalog(s, 10))
        assert w.n_chambers == 2, f"s={s}"
        assert w.supports[0] == frozenset()
        assert w.end_reason == "volume-zero"


def test_walk_single_chamber():
    w = walk_ray(H(1), SurfaceModel(1).exceptional(1), catalog(1))
    assert w.n_chambers == 1
    assert w.end_t == 1


def test_walk_example_ray_s3():
    # ample (7;1,2,3) moved towards +E: exceptional curves join one by one
    w = walk_ray(DivClass(7, [1, 2, 3]), DivClass(0, [1, 1, 1]), catalog(3))
    assert w.breakpoints == (0, 1, 2, 3)
    assert w.n_chambers == 4
    sizes = [len(s) for s in w.supports]
    assert sizes == [0, 1, 2, 3]
    assert w.end_t is UNBOUNDED and w.end_reason == "unbounded"


def test_walk_supports_grow():
    for s, direction in ((5, EE(5)), (3, DivClass(0, [1, 1, 1]))):
        w = walk_ray(H(s) if s == 5 else DivClass(7, [1, 2, 3]),
                     direction, catalog(s))
        for a, b in zip(w.supports, w.supports[1:]):
            assert a < b


def test_walk_volume_piecewise_quadratic_and_monotone():
    w = walk_ray(H(6), EE(6), catalog(6, 10))
    cat = catalog(6, 10)
    ts = list(w.breakpoints) + [w.end_t]
    last = None
    for i, fam in enumerate(w.families):
        a, b = ts[i], ts[i + 1]
        mid1 = a + (b - a) / 3
        mid2 = a + (b - a) * Fr(2, 3)
        for t in (a, mid1, mid2):
            z = decompose(H(6) - EE(6).scale(t), cat)
            # P_t affine on the chamber, volume matches the quadratic
            assert z.positive == fam.positive_at(t)
            c0, c1, c2 = fam.volume_quadratic()
            assert z.volume == c0 + c1 * t + c2 * t * t
            if last is not None:
                assert z.volume <= last
            last = z.volume


def test_walk_volume_continuous_at_breakpoints():
    w = walk_ray(H(7), EE(7), catalog(7))
    for i in range(1, len(w.breakpoints)):
        t = w.breakpoints[i]
        c0, c1, c2 = w.families[i - 1].volume_quadratic()
        d0, d1, d2 = w.families[i].volume_quadratic()
        assert c0 + c1 * t + c2 * t * t == d0 + d1 * t + d2 * t * t


def test_walk_s9_boundary_witness():
    w = walk_ray(H(9), EE(9), catalog(9))
    assert w.end_t == Fr(1, 3)
    assert w.end_reason == "boundary-witness"
    # the positive part at the end is a positive multiple of -K
    p = w.families[-1].positive_at(Fr(1, 3))
    assert p == DivClass(3, [1] * 9).scale(Fr(1, 3))


def test_walk_json_roundtrip_shapes():
    w = walk_ray(H(5), EE(5), catalog(5))
    blob = w.to_json()
    assert blob["breakpoints"] == ["0", "2/5"]
    assert blob["end"] == {"t": "1/2", "reason": "volume-zero"}
    assert blob["supports"][0] == []
    assert len(blob["supports"][1]) == 1
