"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py --repeat 5
"""
import argparse
import time

from hibi import kernels
from hibi.faces import _rule_arrays
from hibi.lattice import builtin_family
from hibi.oracle import jacobian_at
from hibi.toric import point_from_mask


def workloads(families):
    for d in families:
        l = builtin_family(d)
        up, down = list(l.poset.up), list(l.poset.down)
        join, meet = list(l._join), list(l._meet)
        a, b, j, m = _rule_arrays(l)
        rows = jacobian_at(l, point_from_mask(l, l.full_mask)).integer_rows()
        n = len(l)
        yield d, "lub_table", lambda: (kernels.lub_table(up), kernels.lub_table(down))
        yield d, "distributive_witness", lambda: kernels.distributive_witness(join, meet, n)
        yield d, "enumerate_embedded", lambda: kernels.enumerate_embedded(n, a, b, j, m)
        yield d, "int_rank", lambda: kernels.int_rank(rows)


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", nargs="+",
                    default=["grid:4x4", "subsets:2,5", "boolean:4", "grid:5x5"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if kernels.compiled_backend is None:
        ap.error("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    print(f"{'lattice':<14}{'kernel':<22}{'python s':>11}{'compiled s':>12}{'speedup':>9}")
    for d, name, fn in workloads(args.families):
        timings = {}
        for backend in ("python", "compiled"):
            kernels.use_backend(backend)
            timings[backend] = best_of(fn, args.repeat)
        ratio = timings["python"] / max(timings["compiled"], 1e-9)
        print(f"{d:<14}{name:<22}{timings['python']:>11.4f}{timings['compiled']:>12.4f}{ratio:>8.1f}x")
    kernels.use_backend("compiled")


if __name__ == "__main__":
    main()
