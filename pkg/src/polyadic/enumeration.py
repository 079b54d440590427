"""Exhaustive codeword enumeration: the package's hot kernel.

Two interchangeable engines compute the full Hamming-weight distribution of
a linear code given by a generator matrix:

* ``cython`` -- the compiled odometer in ``_wdist`` (built at install time),
* ``numpy``  -- a chunked table-lookup fallback, always available.

Both walk the q^k messages in lexicographic order over the packed-value
field order and produce identical histograms; the default engine is the
compiled one when the extension imported.  ``benchmarks/bench_enumeration.py``
compares the two.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from . import gf
from .errors import BudgetExceeded

try:
    from . import _wdist

    HAVE_COMPILED = True
except ImportError:  # pure-Python install
    _wdist = None
    HAVE_COMPILED = False

DEFAULT_ENGINE = "cython" if HAVE_COMPILED else "numpy"
DEFAULT_BUDGET = 10**7

_CHUNK = 1 << 15


def _tables_or_raise(field: gf.FieldSpec):
    tabs = field.tables()
    if tabs is None:
        raise BudgetExceeded(
            f"GF({field.q}) exceeds the dense-table limit for enumeration")
    return tabs


def _scaled_rows(field: gf.FieldSpec, rows: np.ndarray) -> np.ndarray:
    """(k, q, n) array: scaled[i, s] = s * rows[i] under the field tables."""
    _, mul, _, _ = _tables_or_raise(field)
    return mul[np.arange(field.q)[None, :, None], rows[:, None, :]]


def _delta_rows(field: gf.FieldSpec, scaled: np.ndarray) -> np.ndarray:
    """delta[i, j] = scaled[i, (j+1) % q] - scaled[i, j]."""
    add, _, neg, _ = _tables_or_raise(field)
    nxt = np.roll(scaled, -1, axis=1)
    return add[nxt, neg[scaled]]


def _wdist_numpy(field: gf.FieldSpec, rows: np.ndarray) -> np.ndarray:
    add, _, _, _ = _tables_or_raise(field)
    k, n = rows.shape
    q = field.q
    scaled = _scaled_rows(field, rows)
    total = q**k
    dist = np.zeros(n + 1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        cw = np.zeros((len(idx), n), dtype=np.int32)
        rem = idx
        for i in range(k - 1, -1, -1):
            d = (rem % q).astype(np.int64)
            rem = rem // q
            cw = add[cw, scaled[i][d]]
        dist += np.bincount(np.count_nonzero(cw, axis=1), minlength=n + 1)
    return dist


def _wdist_cython(field: gf.FieldSpec, rows: np.ndarray) -> np.ndarray:
    add, _, _, _ = _tables_or_raise(field)
    k, n = rows.shape
    scaled = _scaled_rows(field, rows)
    delta = np.ascontiguousarray(_delta_rows(field, scaled), dtype=np.int32)
    return _wdist.weight_distribution(
        np.ascontiguousarray(add, dtype=np.int32), delta, n, k, field.q, field.q**k)


def weight_distribution(field: gf.FieldSpec, rows: np.ndarray,
                        engine: Optional[str] = None) -> np.ndarray:
    """Exact weight histogram W_0..W_n of the code spanned by `rows`.

    `rows` must be a full-rank (k, n) int array of packed field values;
    the scan is complete (no early exit), so the histogram is exact.
    """
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise ValueError("rows must be 2-dimensional")
    k, n = rows.shape
    if k == 0:
        dist = np.zeros(n + 1, dtype=np.int64)
        dist[0] = 1
        return dist
    engine = engine or DEFAULT_ENGINE
    if engine == "cython":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel not available")
        return _wdist_cython(field, rows)
    if engine == "numpy":
        return _wdist_numpy(field, rows)
    raise ValueError(f"unknown engine {engine!r}")


def sampled_min_weight(field: gf.FieldSpec, rows: np.ndarray, budget: int,
                       engine: Optional[str] = None) -> tuple:
    """Deterministic upper bound on the minimum weight when q^k > budget.

    The sample is (a) every nonzero scalar multiple of every generator row
    and (b) the full subcode spanned by the trailing t rows, t maximal with
    q^t <= budget.  Returns (upper_bound, words_enumerated).
    """
    rows = np.asarray(rows, dtype=np.int64)
    k, n = rows.shape
    q = field.q
    best = n
    count = 0
    _, mul, _, _ = _tables_or_raise(field)
    for i in range(k):
        scaled = mul[np.arange(1, q)[:, None], rows[i][None, :]]
        best = min(best, int(np.count_nonzero(scaled, axis=1).min()))
        count += q - 1
    t = 0
    while q ** (t + 1) <= budget and t < k:
        t += 1
    if t > 0:
        dist = weight_distribution(field, rows[k - t:], engine)
        nz = np.nonzero(dist[1:])[0]
        if len(nz):
            best = min(best, int(nz[0]) + 1)
        count += q**t
    return best, count
