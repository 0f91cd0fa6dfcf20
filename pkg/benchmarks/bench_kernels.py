"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from optb import _pykernels

try:
    from optb import _ckernels
except ImportError:
    _ckernels = None


def word_inputs(n_words, length, seed=0):
    rng = random.Random(seed)
    words = []
    for _ in range(n_words):
        codes = [rng.randrange(4) for _ in range(length)]
        exps = [rng.choice((-2, -1, 1, 2)) for _ in codes]
        words.append((codes, exps))
    return words


def bench_words(kernels, words):
    for codes, exps in words:
        try:
            kernels.word_matrix(codes, exps)
        except OverflowError:
            _pykernels.word_matrix(codes, exps)


def bench_gof(kernels, ms):
    for m in ms:
        kernels.gof_hits(m)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cases = [
        ("word_matrix, 2000 words of length 8", bench_words, word_inputs(2000, 8)),
        ("word_matrix, 200 words of length 60", bench_words, word_inputs(200, 60)),
        ("gof_hits, m = 2..200", bench_gof, range(2, 201)),
        ("gof_hits, m = 1000", bench_gof, [1000]),
    ]
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not available; timing pure Python only")

    print(f"{'case':40} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for title, fn, data in cases:
        times = [min(timeit.repeat(lambda: fn(k, data), number=1, repeat=args.repeat))
                 for _, k in backends]
        cells = " ".join(f"{t * 1e3:8.2f}ms" for t in times)
        speedup = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{title:40} {cells} {speedup}")


if __name__ == "__main__":
    main()
