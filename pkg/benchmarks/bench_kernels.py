"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from pfaffrep import kernels
from pfaffrep import representation as rp
from pfaffrep.pfaffian import determinant, pfaffian, skew_from_upper
from pfaffrep.ring import ZZ, make_ring


def _cases():
    rng = random.Random(0)
    ring = make_ring("int[x,y,z]")
    x, y, z = ring.gens()
    p = (x + 2 * y - 3 * z + 1) ** 6
    q = (2 * x - y + z - 1) ** 6
    dense = {size: skew_from_upper(ZZ, size, [(i, j, rng.randint(-9, 9))
                                              for i in range(1, size + 1)
                                              for j in range(i + 1, size + 1)])
             for size in (10, 14)}
    reps = {d: rp.build(rp.generic_coeffs(d)) for d in (4, 5)}
    pencil5 = reps[5].pencil()
    return {
        f"poly mul ({len(p.terms)} x {len(q.terms)} terms)": lambda: p * q,
        "pf 10x10 integer": lambda: pfaffian(dense[10]),
        "pf 14x14 integer": lambda: pfaffian(dense[14]),
        "det 10x10 integer": lambda: determinant(dense[10]),
        "symbolic Pf, degree 4": lambda: reps[4].pfaffian(),
        "symbolic Pf, degree 5": lambda: reps[5].pfaffian(),
        "symbolic det, degree 5 pencil": lambda: determinant(pencil5),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    names = sorted(kernels.BACKENDS, reverse=True)
    cases = _cases()
    print(f"{'case':<32}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn in cases.items():
        best = {}
        for name in names:
            kernels.use_backend(name)
            number = max(1, int(0.2 / max(timeit.timeit(fn, number=1), 1e-6)))
            best[name] = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
        row = f"{label:<32}" + "".join(f"{best[n] * 1e3:>10.3f}ms" for n in names)
        if "cython" in best:
            row += f"{best['python'] / best['cython']:>9.2f}x"
        print(row)
    kernels.use_backend(names[0])


if __name__ == "__main__":
    main()
