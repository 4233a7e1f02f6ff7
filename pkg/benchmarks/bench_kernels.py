"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row reports the best of N timings per backend and the speedup.
"""

import argparse
import timeit

from matkls._kernels import _pykernels
from matkls.lattice import lattice_of_flats
from matkls.named import build_named

try:
    from matkls._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases():
    for spec in ("graphic:K5", "pg:2,3", "pg:3,2", "uniform:5,16", "graphic:prism"):
        m = build_named(spec)
        ranks = _pykernels.rank_table(m.n, m.bases)
        lat = lattice_of_flats(m)
        yield f"rank_table {spec}", lambda k, m=m: k.rank_table(m.n, m.bases)
        if m.n <= 18:
            yield f"tutte_counts {spec}", lambda k, r=ranks, m=m: k.tutte_counts(r, m.n, m.r)
        yield f"containment_lists {spec}", lambda k, f=lat.flats: k.containment_lists(f)
        yield f"max_intersection {spec}", lambda k, m=m: [k.max_intersection(m.bases, s) for s in range(0, 1 << m.n, 97)]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'kernel':<34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, call in cases():
        py = best(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<34} {py * 1e3:>10.3f} {'-':>10} {'-':>8}")
            continue
        assert call(_ckernels) == call(_pykernels), name
        cy = best(lambda: call(_ckernels), args.repeat)
        print(f"{name:<34} {py * 1e3:>10.3f} {cy * 1e3:>10.3f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
