"""Fat-point linear systems on P^2: predicted dimension and speciality.

A system (d; m_1 >= ... >= m_s >= -1) of plane curves of degree d with
ordered base multiplicities is classified by Cremona reduction: while the
degree is smaller than the sum of the three largest multiplicities, apply
the standard quadratic transformation based there.  The terminal system is
either visibly empty (negative degree, or a multiplicity exceeding the
degree) or in standard form, where the expected dimension is the virtual
one floored at empty.  Multiplicities <= -2 appearing along the way are
multiple exceptional curves in the base locus and are split off (they change
the virtual count but not the dimension).  Speciality always compares
against the virtual dimension of the original system.

An independent finite-field oracle computes the actual dimension at random
points: the rank of the matrix of Taylor-coefficient vanishing conditions in
an affine chart, over a large prime field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import CharacteristicTooSmall
from .rational import fmt_rational

DEFAULT_CHARACTERISTIC = 1000003


@dataclass(frozen=True)
class LinearSystem:
    """Integer fat-point system; multiplicities are stored sorted
    descending and must all be >= -1."""

    d: int
    mults: tuple

    def __init__(self, d: int, mults=()):
        ms = tuple(sorted((int(m) for m in mults), reverse=True))
        if any(m < -1 for m in ms):
            raise ValueError("multiplicities must be >= -1")
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "mults", ms)

    @property
    def s(self) -> int:
        return len(self.mults)

    def __repr__(self):
        return f"({self.d}; {', '.join(map(str, self.mults))})"


def vdim(system: LinearSystem) -> int:
    """Virtual projective dimension d(d+3)/2 - sum m_i(m_i+1)/2."""
    return (system.d * (system.d + 3)) // 2 \
        - sum(m * (m + 1) // 2 for m in system.mults)


def _vdim_raw(d: int, mults) -> int:
    return (d * (d + 3)) // 2 - sum(m * (m + 1) // 2 for m in mults)


@dataclass(frozen=True)
class ReductionResult:
    terminal_d: int
    terminal_mults: tuple
    state: str  # "standard" | "empty"
    trace: tuple


def cremona_reduce(system: LinearSystem) -> ReductionResult:
    """Reduce to standard form (d >= m1+m2+m3) or detect emptiness.

    Trace steps record each Cremona move and each fixed multiple exceptional
    split off at the end.
    """
    d = system.d
    mults = list(system.mults)
    trace = []
    for _ in range(10_000):
        mults.sort(reverse=True)
        top3 = sum((mults + [0, 0, 0])[:3])
        if d < 0:
            trace.append({"step": "empty", "reason": "negative degree"})
            return ReductionResult(d, tuple(mults), "empty", tuple(trace))
        if d < top3:
            m1, m2, m3 = (mults + [0, 0, 0])[:3]
            nd = 2 * d - m1 - m2 - m3
            new = [d - m2 - m3, d - m1 - m3, d - m1 - m2] + mults[3:]
            trace.append({"step": "cremona",
                          "from": [d] + mults, "to": [nd] + sorted(new, reverse=True)})
            d, mults = nd, new
            continue
        if any(m <= -2 for m in mults):
            # multiple exceptional curves in the base locus: split them off
            fixed = [m for m in mults if m <= -2]
            trace.append({"step": "split-fixed-exceptional", "mults": fixed})
            mults = [m if m > -2 else 0 for m in mults]
            continue
        cleaned = [m for m in mults if m >= 1]
        if cleaned and d < cleaned[0]:
            trace.append({"step": "empty",
                          "reason": "multiplicity exceeds degree"})
            return ReductionResult(d, tuple(sorted(mults, reverse=True)),
                                   "empty", tuple(trace))
        return ReductionResult(d, tuple(sorted(mults, reverse=True)),
                               "standard", tuple(trace))
    raise RuntimeError("Cremona reduction did not terminate")


@dataclass(frozen=True)
class SHGHReport:
    system: LinearSystem
    vdim: int
    predicted_dim: int
    special: bool
    trace: tuple
    oracle_dim: Optional[int] = None
    oracle_characteristic: Optional[int] = None
    oracle_seed: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "d": self.system.d,
            "mults": list(self.system.mults),
            "vdim": self.vdim,
            "predicted_dim": self.predicted_dim,
            "special": self.special,
            "trace": [dict(step) for step in self.trace],
        }
        if self.oracle_dim is not None:
            out["oracle"] = {
                "dim": self.oracle_dim,
                "characteristic": self.oracle_characteristic,
                "seed": self.oracle_seed,
            }
        return out


def classify(system: LinearSystem, oracle: bool = False,
             characteristic: int = DEFAULT_CHARACTERISTIC,
             seed: int = 0) -> SHGHReport:
    """Predicted dimension and speciality via Cremona reduction; optionally
    cross-checked by the finite-field rank oracle."""
    v = vdim(system)
    red = cremona_reduce(system)
    if red.state == "empty":
        predicted = -1
    else:
        predicted = max(_vdim_raw(red.terminal_d,
                                  [m for m in red.terminal_mults if m >= 1]), -1)
    special = predicted != max(v, -1)
    odim = ochar = oseed = None
    if oracle:
        odim = oracle_dim(system, characteristic, seed)
        ochar, oseed = characteristic, seed
    return SHGHReport(system, v, predicted, special, red.trace,
                      odim, ochar, oseed)


# -- finite-field interpolation oracle ----------------------------------------


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Row reduction over F_p with int64 entries (p^2 must fit in int64)."""
    m = matrix % p
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = None
        for r in range(rank, rows):
            if m[r, col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        factors = m[rank + 1:, col].copy()
        if factors.any():
            m[rank + 1:] = (m[rank + 1:] - np.outer(factors, m[rank])) % p
        rank += 1
    return rank


def oracle_dim(system: LinearSystem, characteristic: int = DEFAULT_CHARACTERISTIC,
               seed: int = 0, max_size: int = 600) -> int:
    """Projective dimension of the system at random points over F_p.

    Conditions are the vanishing of all Taylor coefficients of order < m_i
    at each point, in the affine chart z = 1 with nonzero coordinates.
    Requires characteristic > d so the binomial factors are invertible.
    """
    import random

    d = system.d
    if d < 0:
        raise ValueError("oracle needs d >= 0")
    p = int(characteristic)
    if p <= d:
        raise CharacteristicTooSmall(
            f"characteristic {p} <= degree {d}; Taylor conditions degenerate")
    n_cols = (d + 1) * (d + 2) // 2
    n_rows = sum(m * (m + 1) // 2 for m in system.mults if m >= 1)
    if n_cols > max_size or n_rows > max_size:
        raise ValueError(
            f"oracle matrix {n_rows}x{n_cols} exceeds the {max_size} cap")

    rng = random.Random(seed)
    points = set()
    while len(points) < len(system.mults):
        points.add((rng.randrange(1, p), rng.randrange(1, p)))
    points = sorted(points)

    binom = [[0] * (d + 1) for _ in range(d + 1)]
    for i in range(d + 1):
        binom[i][0] = 1
        for j in range(1, i + 1):
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j]

    monomials = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    rows = []
    for (a, b), m in zip(points, system.mults):
        if m < 1:
            continue
        pow_a = [pow(a, e, p) for e in range(d + 1)]
        pow_b = [pow(b, e, p) for e in range(d + 1)]
        for alpha in range(m):
            for beta in range(m - alpha):
                row = []
                for (i, j) in monomials:
                    if i < alpha or j < beta:
                        row.append(0)
                    else:
                        row.append((binom[i][alpha] * binom[j][beta]
                                    * pow_a[i - alpha] * pow_b[j - beta]) % p)
                rows.append(row)
    if not rows:
        return n_cols - 1
    matrix = np.array(rows, dtype=np.int64)
    return n_cols - _rank_mod_p(matrix, p) - 1
