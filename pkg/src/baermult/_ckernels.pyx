# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; see ``_pykernels`` for the contracts."""

import numpy as np

ctypedef long long i64


def extend_layer(weight, right, starts, ends, int w):
    cdef const i64[:] wt = np.ascontiguousarray(weight, dtype=np.int64)
    cdef const i64[:] rt = np.ascontiguousarray(right, dtype=np.int64)
    cdef const i64[:] st = np.ascontiguousarray(starts, dtype=np.int64)
    cdef const i64[:] en = np.ascontiguousarray(ends, dtype=np.int64)
    cdef Py_ssize_t b, a, a_lo, a_hi, top = en[w - 1], n = 0
    cdef i64 wa, rb
    # first pass sizes the output
    for b in range(top):
        wa = w - wt[b]
        if wa < 1:
            continue
        a_lo = st[wa]
        a_hi = en[wa] if en[wa] < b else b
        rb = rt[b]
        if rb >= 0 and rb > a_lo:
            a_lo = rb
        if a_hi > a_lo:
            n += a_hi - a_lo
    out_l = np.empty(n, dtype=np.int64)
    out_r = np.empty(n, dtype=np.int64)
    cdef i64[:] ol = out_l
    cdef i64[:] orr = out_r
    n = 0
    for b in range(top):
        wa = w - wt[b]
        if wa < 1:
            continue
        a_lo = st[wa]
        a_hi = en[wa] if en[wa] < b else b
        rb = rt[b]
        if rb >= 0 and rb > a_lo:
            a_lo = rb
        for a in range(a_lo, a_hi):
            ol[n] = b
            orr[n] = a
            n += 1
    return out_l.tolist(), out_r.tolist()


def count_pairs(weight, tclass, Py_ssize_t b_lo, Py_ssize_t b_hi,
                Py_ssize_t a_lo, Py_ssize_t a_hi,
                i64 cb_min, i64 ca_min, i64 csum_max, int nclass):
    cdef const i64[:] wt = np.ascontiguousarray(weight, dtype=np.int64)
    cdef const i64[:] tc = np.ascontiguousarray(tclass, dtype=np.int64)
    bins_arr = np.zeros(nclass, dtype=np.int64)
    cdef i64[:] bins = bins_arr
    cdef i64 excluded = 0, wb, wa, tb, ta
    cdef Py_ssize_t beta, alpha, top
    for beta in range(b_lo, b_hi):
        wb = wt[beta]
        tb = tc[beta]
        top = a_hi if a_hi < beta else beta
        for alpha in range(a_lo, top):
            wa = wt[alpha]
            if wb >= cb_min and wa >= ca_min and wb + wa <= csum_max:
                excluded += 1
                continue
            ta = tc[alpha]
            bins[tb if tb > ta else ta] += 1
    return [int(x) for x in bins_arr], int(excluded)
