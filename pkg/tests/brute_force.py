"""Throwaway brute-force counter for the worked multiplier instance.

Deliberately shares no code with ``baermult``: trees are plain tuples, the
ordering and the basic-commutator test are re-derived here, and every binary
tree of a given weight is generated and filtered instead of being built
inductively.
"""

from itertools import product


def trees(weight, letters):
    """All bracketings of ``weight`` leaves drawn from ``letters``."""
    if weight == 1:
        return [x for x in letters]
    out = []
    for k in range(1, weight):
        for left in trees(k, letters):
            for right in trees(weight - k, letters):
                out.append((left, right))
    return out


def wt(t):
    return 1 if isinstance(t, int) else wt(t[0]) + wt(t[1])


def key(t):
    if isinstance(t, int):
        return (1, t)
    return (wt(t), key(t[0]), key(t[1]))


def basic(t):
    if isinstance(t, int):
        return True
    b, a = t
    if not (basic(b) and basic(a)):
        return False
    if not key(b) > key(a):
        return False
    if not isinstance(b, int) and key(b[1]) > key(a):
        return False
    return True


def letters_in(t):
    return {t} if isinstance(t, int) else letters_in(t[0]) | letters_in(t[1])


def count_structure(m, t, n, c1, c2):
    """Return (free_rank, [multiplicity_1..multiplicity_t]) by brute force."""
    alphabet = list(range(1, m + t + 1))
    lo, hi = min(c1, c2) + 1, max(c1, c2) + n
    basics = {}
    for w in range(lo, hi + 1):
        basics[w] = [x for x in trees(w, alphabet) if basic(x)]
    betas = [x for w in range(c1 + 1, c1 + n + 1) for x in basics[w]]
    alphas = [x for w in range(c2 + 1, c2 + n + 1) for x in basics[w]]
    free = 0
    tors = [0] * t
    for beta, alpha in product(betas, alphas):
        if not key(beta) > key(alpha):
            continue
        wb, wa = wt(beta), wt(alpha)
        if wb >= c2 + n + 1 and wa >= c1 + 1 and wb + wa <= 2 * n + c1 + c2 + 1:
            continue
        top = max(letters_in(beta) | letters_in(alpha))
        if top <= m:
            free += 1
        else:
            tors[top - m - 1] += 1
    return free, tors


if __name__ == "__main__":
    print(count_structure(2, 1, 2, 3, 3))
