"""Built-in fixture corpus: classical values reproduced by the library.

Each fixture returns (ok, detail).  The CLI ``fixtures`` subcommand runs
them and prints a pass/fail table; they double as a quick health check of an
installed copy."""

from __future__ import annotations

from fractions import Fraction as Fr

from .curves import generate_catalog
from .lattice import DivClass, SurfaceModel
from .okounkov import e_max, okounkov_body, okounkov_function, query_phi
from .polygon import Polygon
from .seshadri import mu, seshadri
from .shgh import LinearSystem, classify, oracle_dim
from .certificate import (DichotomyCertificate, check_dichotomy,
                          quadratic_form_report, scan_box,
                          window_function_at_lower_bound)
from .zariski import walk_ray


def _cat(s, dmax=8):
    return generate_catalog(SurfaceModel(s), dmax)


def _fx_catalog_counts():
    counts = {s: len(_cat(s, 10)) for s in (6, 7, 8)}
    ok = counts == {6: 27, 7: 56, 8: 240}
    return ok, f"(-1)-class counts {counts}"


def _fx_simplex_body():
    body = okounkov_body(DivClass(1, []), None, _cat(0, 2))
    want = Polygon([(0, 0), (1, 0), (0, 1)])
    ok = body.polygon.same_shape(want) and body.area() == Fr(1, 2)
    return ok, f"body {body.polygon}"


def _fx_cut_simplex():
    cat = _cat(1, 2)
    details = []
    ok = True
    for lam in (Fr(1, 4), Fr(1, 2), Fr(3, 4)):
        body = okounkov_body(DivClass(1, [lam]), None, cat)
        want = Polygon([(0, 0), (1 - lam, 0), (1 - lam, lam), (0, 1)])
        ok = ok and body.polygon.same_shape(want)
        details.append(f"lambda={lam}: {body.polygon.n} vertices")
    return ok, "; ".join(details)


def _fx_six_point_triangle():
    body = okounkov_body(DivClass(1, [Fr(2, 5)] * 6), None, _cat(6))
    want = Polygon([(0, 0), (Fr(1, 25), 0), (0, 1)])
    ok = body.polygon.same_shape(want) and body.area() == Fr(1, 50)
    return ok, f"body {body.polygon}, area {body.area()}"


def _fx_seshadri_values():
    e7 = seshadri(DivClass(1, [0] * 7), "all", _cat(7))
    e5 = seshadri(DivClass(1, [0] * 5), "all", _cat(5))
    ok = e7.value == Fr(3, 8) and e5.value == Fr(2, 5)
    return ok, f"eps(7pts)={e7.value}, eps(5pts)={e5.value}"


def _fx_mu_values():
    m5 = mu(DivClass(1, [0] * 5), "all", _cat(5))
    m1 = mu(DivClass(1, []), "very-general", _cat(1, 2))
    ok = m5.value == Fr(1, 2) and m1.value == 1
    return ok, f"mu(5pts)={m5.value}, mu(1pt)={m1.value}"


def _fx_two_chambers():
    chambers = {}
    for s in (5, 6, 7, 8):
        w = walk_ray(DivClass(1, [0] * s), DivClass(0, [-1] * s), _cat(s, 10))
        chambers[s] = w.n_chambers
    ok = all(c == 2 for c in chambers.values())
    return ok, f"chambers {chambers}"


def _fx_example_ray():
    w = walk_ray(DivClass(7, [1, 2, 3]), DivClass(0, [1, 1, 1]), _cat(3))
    ok = w.n_chambers == 4 and w.end_reason == "unbounded"
    return ok, f"{w.n_chambers} chambers, breakpoints {list(w.breakpoints)}"


def _fx_okounkov_function_bound():
    d6 = DivClass(1, [Fr(2, 5)] * 6)
    cat7 = _cat(7)
    em = e_max(d6, cat7)
    muv = mu(d6, "very-general", cat7)
    slices = okounkov_function(d6, None, cat7, tol=Fr(1, 64))
    q = query_phi(slices, (Fr(1, 100), Fr(7, 20)))
    ok = (em == muv.value and not q.outside
          and q.hi <= Fr(4, 15) and em <= Fr(4, 15))
    return ok, f"e_max={em}, phi(1/100,7/20) in [{q.lo},{q.hi}]"


def _fx_shgh():
    special = classify(LinearSystem(2, [2, 2]))
    pencil = classify(LinearSystem(2, [1] * 5))
    cubic = classify(LinearSystem(3, [2] + [1] * 6))
    ok = (special.special and special.predicted_dim == 0
          and not pencil.special and pencil.predicted_dim == 0
          and not cubic.special and cubic.predicted_dim == 0
          and special.predicted_dim == oracle_dim(LinearSystem(2, [2, 2])))
    return ok, (f"(2;2,2) special dim {special.predicted_dim}; "
                f"(2;1^5) dim {pencil.predicted_dim}; (3;2,1^6) dim {cubic.predicted_dim}")


def _fx_challenge_vdim():
    rep = classify(LinearSystem(22, [7] * 9), oracle=True)
    ok = rep.vdim == 23 and rep.oracle_dim == 23 and not rep.special
    return ok, f"vdim={rep.vdim}, oracle={rep.oracle_dim}"


def _fx_certificate():
    zeros = all(window_function_at_lower_bound(s).is_zero() for s in range(9, 21))
    q = quadratic_form_report(9, Fr(8, 25))
    rep = check_dichotomy(DichotomyCertificate(9, Fr(8, 25), 58, 20, 2))
    scan = scan_box(9, Fr(8, 25), 60)
    ok = (zeros and q.negative_semidefinite and rep.failed == ("dimension_count",)
          and not scan.counterexamples)
    return ok, (f"boundary zeros ok={zeros}, det={q.determinant}, "
                f"scan(60): {scan.triples_passing_bounds} pass bounds, "
                f"{len(scan.counterexamples)} counterexamples")


FIXTURES = {
    "catalog-counts": _fx_catalog_counts,
    "simplex-body": _fx_simplex_body,
    "cut-simplex-bodies": _fx_cut_simplex,
    "six-point-triangle": _fx_six_point_triangle,
    "seshadri-values": _fx_seshadri_values,
    "mu-values": _fx_mu_values,
    "two-chambers": _fx_two_chambers,
    "max-chamber-ray": _fx_example_ray,
    "okounkov-function-bound": _fx_okounkov_function_bound,
    "shgh-classification": _fx_shgh,
    "challenge-vdim": _fx_challenge_vdim,
    "certificate": _fx_certificate,
}


def run_fixtures(names=None):
    """Run fixtures by name (all when None); yields (name, ok, detail)."""
    selected = list(FIXTURES) if not names or names == ["all"] else list(names)
    results = []
    for name in selected:
        if name not in FIXTURES:
            raise KeyError(f"unknown fixture: {name}")
        try:
            ok, detail = FIXTURES[name]()
        except Exception as exc:  # a crashing fixture is a failing fixture
            ok, detail = False, f"error: {exc}"
        results.append((name, ok, detail))
    return results
