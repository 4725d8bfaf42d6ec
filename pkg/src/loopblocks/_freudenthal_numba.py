"""Compiled inner loop for the Freudenthal multiplicity recursion.

The pure-Python implementation in :mod:`rootsys` is the reference; this
module reproduces it with numpy int64 arrays and a numba nopython kernel so
that large tables (E-series, weights with thousands of dominant weights
below them) stay fast.  Importing it raises if numba is missing, which the
caller treats as "use the pure path".

Weights are encoded as base-B integers (coordinates shifted by an offset MB
so they are nonnegative).  The caller guarantees every weight reached by the
recursion has coordinates in [-MB, MB], so the encoding is injective; a
reflected weight with a coordinate above MB cannot lie under the highest
weight and is treated as multiplicity zero.
"""

import numpy as np
from numba import njit

from . import rootsys as _rs


@njit(cache=True)
def _kernel(cartan, dvec, pos_om, pos_rc, pos_dw, pos_norm,
            doms, rcvecs, lam, MB, base, keys_sorted, keys_argsort):
    M, n = doms.shape
    P = pos_om.shape[0]
    mults = np.zeros(M, dtype=np.int64)
    nu = np.zeros(n, dtype=np.int64)
    tmp = np.zeros(n, dtype=np.int64)
    for idx in range(M):
        level = 0
        for j in range(n):
            level += rcvecs[idx, j]
        if level == 0:
            mults[idx] = 1
            continue
        total = 0
        for b in range(P):
            kmax = np.int64(1 << 60)
            for j in range(n):
                if pos_rc[b, j] > 0:
                    q = rcvecs[idx, j] // pos_rc[b, j]
                    if q < kmax:
                        kmax = q
            if kmax <= 0:
                continue
            pair = 0
            for j in range(n):
                pair += pos_dw[b, j] * doms[idx, j]
                nu[j] = doms[idx, j]
            for k in range(1, kmax + 1):
                for j in range(n):
                    nu[j] += pos_om[b, j]
                pair += pos_norm[b]
                for j in range(n):
                    tmp[j] = nu[j]
                while True:
                    neg = -1
                    for i in range(n):
                        if tmp[i] < 0:
                            neg = i
                            break
                    if neg < 0:
                        break
                    c = tmp[neg]
                    for t in range(n):
                        tmp[t] -= c * cartan[t, neg]
                key = np.int64(0)
                ok = True
                for i in range(n - 1, -1, -1):
                    if tmp[i] > MB:
                        ok = False
                        break
                    key = key * base + (tmp[i] + MB)
                if not ok:
                    break
                pos = np.searchsorted(keys_sorted, key)
                if pos >= M or keys_sorted[pos] != key:
                    break
                m = mults[keys_argsort[pos]]
                if m == 0:
                    break
                total += pair * m
        den = 0
        for j in range(n):
            den += dvec[j] * rcvecs[idx, j] * (lam[j] + doms[idx, j] + 2)
        if (2 * total) % den != 0:
            mults[idx] = -1  # poison: caller asserts positivity
        else:
            mults[idx] = (2 * total) // den
    return mults


def run(rs, lam, doms, order):
    """Drop-in replacement for the pure recursion.  Falls back on overflow."""
    n = rs.rank
    pos = rs.positive_roots()
    doms_arr = np.array(order, dtype=np.int64)
    rcvecs = np.array([doms[mu] for mu in order], dtype=np.int64)
    H = int(rcvecs.max(axis=0).sum())
    MB = max(max(lam), 0) + 3 * H + 1
    base = 2 * MB + 1
    if base ** n >= (1 << 62):
        return _rs._freudenthal_python(rs, lam, doms, order)
    keys = np.zeros(len(order), dtype=np.int64)
    for i, mu in enumerate(order):
        key = 0
        for x in reversed(mu):
            key = key * base + (x + MB)
        keys[i] = key
    argsort = np.argsort(keys).astype(np.int64)
    keys_sorted = keys[argsort]
    mults = _kernel(
        np.array(rs.cartan, dtype=np.int64),
        np.array(rs.symmetrizers, dtype=np.int64),
        np.array([b.omega for b in pos], dtype=np.int64),
        np.array([b.rc for b in pos], dtype=np.int64),
        np.array([b.dw for b in pos], dtype=np.int64),
        np.array([b.norm for b in pos], dtype=np.int64),
        doms_arr, rcvecs,
        np.array(lam, dtype=np.int64),
        np.int64(MB), np.int64(base), keys_sorted, argsort,
    )
    assert mults.min() >= 1, "compiled Freudenthal produced a non-positive entry"
    return {mu: int(m) for mu, m in zip(order, mults)}
