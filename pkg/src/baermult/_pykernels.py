"""Pure-Python versions of the enumeration kernels.

Both functions take position-indexed integer sequences describing basic
commutators sorted in Hall order; ``_ckernels.pyx`` mirrors them line for line.
"""


def extend_layer(weight, right, starts, ends, w):
    """Basic commutators [b, a] of weight ``w`` from all earlier layers.

    ``weight[p]``/``right[p]`` describe position ``p`` (``right`` is -1 for a
    letter); ``starts[v]:ends[v]`` is the position range of weight ``v``.
    Returns ``(lefts, rights)`` in Hall order for the new layer.
    """
    weight = list(weight)
    right = list(right)
    lefts, rights = [], []
    top = ends[w - 1]
    for b in range(top):
        wa = w - weight[b]
        if wa < 1:
            continue
        a_lo = starts[wa]
        a_hi = min(ends[wa], b)
        rb = right[b]
        if rb >= 0 and rb > a_lo:
            a_lo = rb
        for a in range(a_lo, a_hi):
            lefts.append(b)
            rights.append(a)
    return lefts, rights


def count_pairs(weight, tclass, b_lo, b_hi, a_lo, a_hi, cb_min, ca_min, csum_max, nclass):
    """Count pairs beta > alpha outside the excluded set, binned by class.

    ``beta`` ranges over positions ``[b_lo, b_hi)`` and ``alpha`` over
    ``[a_lo, min(a_hi, beta))``. A pair is excluded when
    ``weight[beta] >= cb_min and weight[alpha] >= ca_min and
    weight[beta] + weight[alpha] <= csum_max``. Kept pairs land in bin
    ``max(tclass[beta], tclass[alpha])``. Returns ``(bins, excluded)``.
    """
    weight = list(weight)
    tclass = list(tclass)
    bins = [0] * nclass
    excluded = 0
    for beta in range(b_lo, b_hi):
        wb = weight[beta]
        tb = tclass[beta]
        for alpha in range(a_lo, min(a_hi, beta)):
            wa = weight[alpha]
            if wb >= cb_min and wa >= ca_min and wb + wa <= csum_max:
                excluded += 1
                continue
            ta = tclass[alpha]
            bins[tb if tb > ta else ta] += 1
    return bins, excluded
