"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs on identical inputs through both modules, the results are
checked for equality, and the best of ``--repeat`` runs is reported.
"""
import argparse
import random
import timeit

from braidcover import _pykernels
from braidcover.alexander import reduced_burau_of_word
from braidcover.braidword import b_family
from braidcover.laurent import LaurentPoly

try:
    from braidcover import _ckernels
except ImportError:
    _ckernels = None


def family_letters(m2, k):
    return list(b_family(m2, k).letters)


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def cases(rng):
    letters = family_letters(12, 4) * 20
    ints = [[rng.randint(-99, 99) for _ in range(12)] for _ in range(12)]
    big = [[rng.randint(-10**30, 10**30) for _ in range(8)] for _ in range(8)]
    burau = reduced_burau_of_word(b_family(8, 2))
    burau_minus_i = [[p - int(i == j) for j, p in enumerate(row)] for i, row in enumerate(burau.rows)]
    pa = [rng.randint(-50, 50) for _ in range(400)]
    pb = [rng.randint(-50, 50) for _ in range(400)]
    zero, one = LaurentPoly(), LaurentPoly.constant(1)
    return [
        ("twist product, 12 strands, %d letters" % len(letters), "apply_twists", lambda: (identity(11), letters)),
        ("Bareiss det, 12x12 small ints", "bareiss_det", lambda: (ints,)),
        ("Bareiss det, 8x8 100-bit ints", "bareiss_det", lambda: (big,)),
        ("Berkowitz, 12x12 ints", "berkowitz", lambda: (ints, 0, 1)),
        ("Berkowitz det(B - I), Burau of B(8,2)", "berkowitz", lambda: (burau_minus_i, zero, one)),
        ("poly_mul, 400 x 400", "poly_mul", lambda: (pa, pb)),
    ]


def best(fn, make_args, repeat):
    return min(timeit.repeat(lambda: fn(*make_args()), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    rng = random.Random(args.seed)
    print(f"{'case':44} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, name, make_args in cases(rng):
        py = getattr(_pykernels, name)
        t_py = best(py, make_args, args.repeat)
        if _ckernels is None:
            print(f"{label:44} {t_py * 1e3:10.2f}")
            continue
        cy = getattr(_ckernels, name)
        assert py(*make_args()) == cy(*make_args()), label
        t_cy = best(cy, make_args, args.repeat)
        print(f"{label:44} {t_py * 1e3:10.2f} {t_cy * 1e3:10.2f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
