import random
from fractions import Fraction as Fr

import pytest

from okbodies import (AlgNum, DivClass, Flag, IrrationalThreshold, NotBig,
                      Polygon, SurfaceModel, decompose, e_max, mu,
                      okounkov_body, okounkov_function, pseff_threshold,
                      query_phi)

from conftest import catalog

D6 = DivClass(1, [Fr(2, 5)] * 6)


def test_simplex_body():
    body = okounkov_body(DivClass(1, []), None, catalog(0, 2))
    assert body.polygon.same_shape(Polygon([(0, 0), (1, 0), (0, 1)]))
    assert body.area() == Fr(1, 2) and body.volume == 1


def test_cut_simplex_bodies():
    for lam in (Fr(1, 4), Fr(1, 2), Fr(3, 4)):
        body = okounkov_body(DivClass(1, [lam]), None, catalog(1, 2))
        want = Polygon([(0, 0), (1 - lam, 0), (1 - lam, lam), (0, 1)])
        assert body.polygon.same_shape(want), lam
        assert body.area() == body.volume / 2


def test_six_point_triangle():
    body = okounkov_body(D6, None, catalog(6))
    assert body.polygon.same_shape(Polygon([(0, 0), (Fr(1, 25), 0), (0, 1)]))
    assert body.area() == Fr(1, 50) and body.volume == Fr(1, 25)


def test_body_profile_matches_walk():
    body = okounkov_body(D6, None, catalog(6))
    assert body.profile.breakpoints == (0, Fr(1, 25))
    assert body.profile.beta(0) == 1
    assert body.profile.beta(Fr(1, 25)) == 0
    assert body.profile.alpha(Fr(1, 50)) == 0
    assert body.profile.area() == body.area()


def random_big_classes(rng, count):
    """Seeded sampler of big classes at s <= 6 whose slicing stays rational
    (irrational thresholds are resampled; they cannot occur for s <= 6 along
    rational rays but bigness still needs checking)."""
    out = []
    while len(out) < count:
        s = rng.randint(0, 6)
        d = rng.randint(1, 4)
        den = rng.choice([1, 2, 3, 5])
        mults = [Fr(rng.randint(0, d * den), den * 2) for _ in range(s)]
        D = DivClass(d, mults)
        cat = catalog(s)
        try:
            if decompose(D, cat).volume <= 0:
                continue
        except Exception:
            continue
        out.append((D, cat))
    return out


def test_area_identity_random():
    rng = random.Random(424)
    for D, cat in random_big_classes(rng, 50):
        body = okounkov_body(D, None, cat)
        assert body.area() * 2 == body.volume, D


def test_not_big_raises():
    with pytest.raises(NotBig):
        okounkov_body(DivClass(0, [-1]), None, catalog(1, 2))


def test_flag_mismatch():
    with pytest.raises(ValueError):
        okounkov_body(D6, Flag(5), catalog(6))


# -- Okounkov function ---------------------------------------------------------


def test_emax_values():
    assert e_max(DivClass(1, []), catalog(1, 2)) == 1
    assert e_max(DivClass(1, [Fr(0)]), catalog(2)) == 1  # lambda = 0 boundary
    assert e_max(D6, catalog(7)) == Fr(1, 5)


def test_emax_equals_mu_two_paths():
    for D, s in ((D6, 6), (DivClass(1, [Fr(1, 2)]), 1), (DivClass(2, [1, 1]), 2)):
        cat_ext = catalog(s + 1)
        assert e_max(D, cat_ext) == mu(D, "very-general", cat_ext).value


def test_simplex_phi_is_sum_of_coordinates():
    slices = okounkov_function(DivClass(1, []), None, catalog(1, 2),
                               tol=Fr(1, 128))
    rng = random.Random(9)
    for _ in range(60):
        a = Fr(rng.randint(0, 128), 128)
        b = Fr(rng.randint(0, 128 - int(a * 128)), 128)
        q = query_phi(slices, (a, b))
        assert not q.outside
        assert q.lo <= a + b
        hi = q.hi if not isinstance(q.hi, AlgNum) else Fr(1)
        assert a + b <= hi
        assert hi - q.lo <= Fr(1, 128) or hi == 1


def test_phi_exact_at_slice_parameters():
    slices = okounkov_function(DivClass(1, []), None, catalog(1, 2),
                               tol=Fr(1, 64))
    for t in slices.ts[1:]:
        q = query_phi(slices, (t / 2, t / 2))
        assert q.lo == t  # phi = a + b = t hit exactly at the slice parameter


def test_cut_simplex_phi_is_sum():
    lam = Fr(1, 2)
    slices = okounkov_function(DivClass(1, [lam]), None, catalog(2),
                               tol=Fr(1, 64))
    assert slices.e_max == 1
    pts = [(Fr(1, 4), Fr(1, 4)), (Fr(1, 2), Fr(1, 4)), (Fr(0), Fr(3, 4))]
    for a, b in pts:
        q = query_phi(slices, (a, b))
        assert not q.outside and q.lo <= a + b
        if not isinstance(q.hi, AlgNum):
            assert a + b <= q.hi


def test_six_point_phi_bounded_on_omega():
    cat7 = catalog(7)
    slices = okounkov_function(D6, None, cat7, tol=Fr(1, 128))
    assert slices.e_max == Fr(1, 5)
    rng = random.Random(77)
    for _ in range(40):
        x = Fr(rng.randint(0, 10), 360)  # inside [0, 11/360)
        lo, hi = Fr(4, 15) - x, 1 - 25 * x
        y = lo + (hi - lo) * Fr(rng.randint(1, 16), 16)
        q = query_phi(slices, (x, y))
        assert not q.outside
        hi_val = q.hi if not isinstance(q.hi, AlgNum) else slices.e_max
        assert hi_val <= Fr(4, 15)


def test_slices_nested_and_t0_matches_body():
    slices = okounkov_function(D6, None, catalog(7), tol=Fr(1, 32))
    body = okounkov_body(D6, None, catalog(6))
    assert slices.polygons[0].same_shape(body.polygon)
    for a, b in zip(slices.polygons, slices.polygons[1:]):
        assert a.contains_polygon(b)
    # grid spacing stays within tol up to e_max
    ts = list(slices.ts) + [slices.e_max]
    assert all(t2 - t1 <= Fr(1, 32) for t1, t2 in zip(ts, ts[1:]))


def test_body_inclusion_under_blow_up():
    # body(pi*D - lambda*F) included in body(D), with the plain flag on the
    # extended surface
    cat7 = catalog(7)
    body0 = okounkov_body(D6, None, catalog(6))
    for lam in (Fr(1, 50), Fr(1, 10), Fr(19, 100)):
        d_ext = DivClass(1, [Fr(2, 5)] * 6 + [lam])
        body = okounkov_body(d_ext, None, cat7)
        assert body0.polygon.contains_polygon(body.polygon), lam


def test_function_domination_under_blow_up():
    # phi for pi*D - lambda*F is dominated by phi for D at shared points
    lam = Fr(1, 10)
    tol = Fr(1, 64)
    base = okounkov_function(D6, None, catalog(7), tol=tol)
    cut = okounkov_function(DivClass(1, [Fr(2, 5)] * 6 + [lam]), None,
                            catalog(8), tol=tol)
    rng = random.Random(3)
    for _ in range(25):
        x = Fr(rng.randint(0, 25), 1000)
        y = Fr(rng.randint(0, 600), 1000)
        qc = query_phi(cut, (x, y))
        if qc.outside:
            continue
        qb = query_phi(base, (x, y))
        assert not qb.outside
        hi_b = qb.hi if not isinstance(qb.hi, AlgNum) else base.e_max
        hi_c = qc.hi if not isinstance(qc.hi, AlgNum) else cut.e_max
        assert hi_c <= hi_b + tol


def test_halfplane_structure_of_slices():
    # every slice is cut out of the t=0 body by finitely many support lines
    slices = okounkov_function(D6, None, catalog(7), tol=Fr(1, 32))
    base_lines = set(slices.polygons[0].edge_lines())
    new_lines = set()
    for poly in slices.polygons:
        for line in poly.edge_lines():
            if line not in base_lines:
                new_lines.add(line)
    directions = {(a, b) for a, b, _ in new_lines}
    assert len(directions) <= 4


def test_phi_concavity_midpoints():
    slices = okounkov_function(D6, None, catalog(7), tol=Fr(1, 128))
    pts = [(Fr(1, 100), Fr(1, 10)), (Fr(1, 30), Fr(1, 20)),
           (Fr(0), Fr(1, 2)), (Fr(1, 50), Fr(1, 4))]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            (x1, y1), (x2, y2) = pts[i], pts[j]
            mid = ((x1 + x2) / 2, (y1 + y2) / 2)
            q1, q2, qm = (query_phi(slices, p) for p in (pts[i], pts[j], mid))
            if any(q.outside for q in (q1, q2, qm)):
                continue
            hi_m = qm.hi if not isinstance(qm.hi, AlgNum) else slices.e_max
            assert hi_m >= (q1.lo + q2.lo) / 2


def test_query_outside():
    slices = okounkov_function(DivClass(1, []), None, catalog(1, 2),
                               tol=Fr(1, 16))
    assert query_phi(slices, (2, 2)).outside
    assert query_phi(slices, (Fr(3, 4), Fr(3, 4))).outside


def test_max_phi_equals_emax_within_tol():
    # the max of phi over slice vertices reaches e_max within tol
    tol = Fr(1, 64)
    slices = okounkov_function(D6, None, catalog(7), tol=tol)
    best = Fr(0)
    for t, poly in zip(slices.ts, slices.polygons):
        for v in poly.vertices:
            q = query_phi(slices, v)
            assert not q.outside
            best = max(best, q.lo)
    assert slices.e_max - best <= tol
    # and the deepest sampled slice is nonempty right below e_max
    assert slices.polygons[-1].n >= 1
    assert slices.e_max - slices.ts[-1] <= tol


def test_challenge_system_exploratory():
    # the nine-point system (22; 7^9): e_max is certified-irrational up to
    # the catalog bound (the exit is the round part of the big cone)
    D = DivClass(22, [7] * 9)
    cat10 = catalog(10, 5)
    em = e_max(D, cat10)
    assert isinstance(em, AlgNum)
    f = em.field
    assert (em - f.sqrt(43)).is_zero()
    slices = okounkov_function(D, None, cat10, tol=Fr(1, 2))
    assert len(slices.ts) >= 12
    for a, b in zip(slices.polygons, slices.polygons[1:]):
        assert a.contains_polygon(b)
