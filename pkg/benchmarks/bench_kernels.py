"""Compiled vs pure-Python kernels on the pair-counting and layer-building hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from baermult import _pykernels
from baermult.commutators import BasicLayers

try:
    from baermult import _ckernels
except ImportError:  # extension not built
    _ckernels = None

# (m, t, n, c1, c2): the worked instance, then progressively larger windows
CASES = [(2, 1, 2, 3, 3), (2, 1, 3, 5, 5), (3, 1, 2, 5, 5), (2, 2, 2, 5, 5)]


def layers_case(mod, d, top):
    weight, right = [1] * d, [-1] * d
    starts, ends = [0, 0], [0, d]
    for w in range(2, top + 1):
        lefts, rights = mod.extend_layer(weight, right, starts, ends, w)
        starts.append(len(weight))
        weight.extend([w] * len(lefts))
        right.extend(rights)
        ends.append(len(weight))
    return len(weight)


def pair_args(m, t, n, c1, c2):
    layers = BasicLayers(m + t, max(c1, c2) + n)
    tclass = [max(0, mask.bit_length() - m) for mask in layers.letters_mask()]
    return (layers.weight, tclass, *layers.span(c1 + 1, c1 + n), *layers.span(c2 + 1, c2 + n),
            c2 + n + 1, c1 + 1, 2 * n + c1 + c2 + 1, t + 1)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if not _ckernels:
        print("compiled extension not importable; timing the fallback only")

    print(f"{'kernel':<12} {'case':<22} {'size':>10} " + " ".join(f"{name:>10}" for name, _ in mods) + "   speedup")
    for d, top in [(2, 18), (3, 11), (4, 9)]:
        times = [best(lambda mod=mod: layers_case(mod, d, top), args.repeat) for _, mod in mods]
        _row("extend_layer", f"d={d} weights<={top}", layers_case(_pykernels, d, top), times)
    for case in CASES:
        a = pair_args(*case)
        results = {name: mod.count_pairs(*a) for name, mod in mods}
        assert len({str(r) for r in results.values()}) == 1, results
        bins, excluded = results["python"]
        times = [best(lambda mod=mod: mod.count_pairs(*a), args.repeat) for _, mod in mods]
        _row("count_pairs", "m={} t={} n={} c={},{}".format(*case), sum(bins) + excluded, times)


def _row(kernel, label, size, times):
    speed = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 and times[1] > 0 else ""
    print(f"{kernel:<12} {label:<22} {size:>10} " + " ".join(f"{t * 1e3:>8.2f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
