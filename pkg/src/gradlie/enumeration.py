"""Exhaustive scans over small prime fields.

Brute force decision procedures over F_p walk projective points (first
nonzero coordinate normalized to 1), so a d-dimensional space costs
(p^d - 1)/(p - 1) points.  Every public scan checks that count against an
element budget first and raises DimensionTooLarge beyond it; the default
of 10**6 can be overridden by the GRADLIE_BUDGET environment variable or a
per-call argument.

The inner loops are numpy int64 arithmetic on the structure tensor
T[i, j, k] = [b_i, b_j]_k; results are converted back to exact Subspace
values, so callers never see floating point or raw arrays.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from .errors import DimensionTooLarge, ValidationError
from .linalg import Subspace, span

DEFAULT_BUDGET = 10 ** 6

_tensor_cache = {}
_ideal_cache = {}


def resolve_budget(budget=None):
    if budget is not None:
        return int(budget)
    env = os.environ.get("GRADLIE_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def projective_count(p, dim):
    if dim <= 0:
        return 0
    return (p ** dim - 1) // (p - 1)


def check_budget(npoints, budget=None):
    cap = resolve_budget(budget)
    if npoints > cap:
        raise DimensionTooLarge(npoints, cap)
    return cap


def structure_tensor(alg):
    """Structure constants of a mod-p algebra as an int64 (n, n, n) array."""
    key = alg
    t = _tensor_cache.get(key)
    if t is None:
        p = alg.field.p
        if p is None:
            raise ValidationError("structure_tensor needs a prime field algebra")
        n = alg.dim
        t = np.zeros((n, n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                t[i, j] = alg.table[i][j]
        t %= p
        t.setflags(write=False)
        _tensor_cache[key] = t
    return t


def _inv_table(p):
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def _rref_mod(m, p, inv):
    """In-place style RREF of an int64 matrix mod p; returns the pivot rows."""
    m = m % p
    m = m[np.any(m, axis=1)]
    if m.size == 0:
        return m.reshape(0, m.shape[1] if m.ndim == 2 else 0)
    rows, n = m.shape
    r = 0
    for c in range(n):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        piv = m[r, c]
        if piv != 1:
            m[r] = (m[r] * inv[piv]) % p
        others = m[:, c].copy()
        others[r] = 0
        hit = np.nonzero(others)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(others[hit], m[r])) % p
        r += 1
    m = m[np.any(m, axis=1)]
    return m


def iter_projective(p, positions, ambient):
    """Projective points supported on the given coordinate positions.

    Yields int tuples of length ambient whose first nonzero entry (within
    positions, scanned in order) equals 1.
    """
    d = len(positions)
    for lead in range(d):
        tail = positions[lead + 1:]
        for rest in itertools.product(range(p), repeat=len(tail)):
            v = [0] * ambient
            v[positions[lead]] = 1
            for pos, c in zip(tail, rest):
                v[pos] = c
            yield tuple(v)


def iter_projective_in(field, rows):
    """Projective points of the row space of an exact basis (F_p only)."""
    p = field.p
    rows = [tuple(r) for r in rows]
    if not rows:
        return
    ambient = len(rows[0])
    for coeffs in iter_projective(p, list(range(len(rows))), len(rows)):
        v = [0] * ambient
        for c, r in zip(coeffs, rows):
            if c:
                for j, x in enumerate(r):
                    v[j] = (v[j] + c * x) % p
        yield tuple(v)


def homogeneous_positions(alg):
    """Coordinate positions of each degree, in support order."""
    out = {}
    for i, d in enumerate(alg.degrees):
        out.setdefault(d, []).append(i)
    return [out[d] for d in sorted(out)]


def scan_points(alg, homogeneous_only=False, budget=None):
    """All projective points of the algebra, optionally degree by degree."""
    p = alg.field.p
    if homogeneous_only:
        blocks = homogeneous_positions(alg)
    else:
        blocks = [list(range(alg.dim))]
    total = sum(projective_count(p, len(b)) for b in blocks)
    check_budget(total, budget)
    for b in blocks:
        yield from iter_projective(p, b, alg.dim)


def principal_ideal_np(alg, v, tensor=None, inv=None):
    """Smallest ideal of a mod-p algebra containing v, via numpy closure."""
    p = alg.field.p
    t = structure_tensor(alg) if tensor is None else tensor
    if inv is None:
        inv = _inv_table(p)
    n = alg.dim
    e = _rref_mod(np.array([v], dtype=np.int64), p, inv)
    while e.shape[0] < n:
        new = np.einsum("ijk,rj->irk", t, e) % p
        e2 = _rref_mod(np.vstack([e, new.reshape(-1, n)]), p, inv)
        if e2.shape[0] == e.shape[0]:
            break
        e = e2
    rows = [tuple(int(x) for x in row) for row in e]
    return span(alg.field, n, rows)


def distinct_principal_ideals(alg, homogeneous_only=False, budget=None):
    """All distinct ideals generated by a single (homogeneous) element.

    Every nonzero (graded) ideal contains one of these, which is what the
    exhaustive semiprimeness / essentiality / socle oracles need.  Results
    are cached per algebra since the scan can take seconds in dimension 8.
    """
    key = (alg, bool(homogeneous_only))
    got = _ideal_cache.get(key)
    if got is not None:
        return got
    p = alg.field.p
    t = structure_tensor(alg)
    inv = _inv_table(p)
    seen = {}
    for v in scan_points(alg, homogeneous_only=homogeneous_only, budget=budget):
        ideal = principal_ideal_np(alg, v, tensor=t, inv=inv)
        seen.setdefault(ideal.rows, ideal)
    out = tuple(seen.values())
    _ideal_cache[key] = out
    return out


def find_absolute_zero_divisor(alg, homogeneous_only=False, budget=None,
                               chunk=4096):
    """First projective point x with (ad x)^2 = 0, or None.

    Quadratic in the argument, so projective representatives suffice.
    Batched: ad matrices for a whole chunk of points come from one einsum.
    """
    p = alg.field.p
    t = structure_tensor(alg)
    n = alg.dim
    points = scan_points(alg, homogeneous_only=homogeneous_only, budget=budget)
    while True:
        block = list(itertools.islice(points, chunk))
        if not block:
            return None
        v = np.array(block, dtype=np.int64)
        ads = np.einsum("bi,ijk->bjk", v, t) % p
        sq = np.matmul(ads, ads) % p
        flat = np.all(sq.reshape(sq.shape[0], -1) == 0, axis=1)
        hits = np.nonzero(flat)[0]
        if hits.size:
            return tuple(int(x) for x in block[hits[0]])
