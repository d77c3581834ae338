"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends must agree on every case; timings are best-of-N.
"""
from __future__ import annotations

import argparse
import timeit

from monohurwitz import _kernels_py as pure
from monohurwitz import kernels
from monohurwitz.hurwitz import canonical_permutation
from monohurwitz.partitions import contents, partitions_of

CASES = [((6,), 6, False), ((3, 3), 6, True), ((2, 2, 1, 1), 6, True), ((4, 2), 4, False)]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        print("compiled extension not built; only the pure backend is available")
        return 1
    fast = kernels.compiled
    print(f"{'case':<28}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for mu, b, connected in CASES:
        target, d = canonical_permutation(mu), sum(mu)
        a = pure.count_monotone(d, b, target, connected)
        c = fast.count_monotone(d, b, target, connected)
        assert a == c, (mu, b, a, c)
        tp = min(timeit.repeat(lambda: pure.count_monotone(d, b, target, connected), number=1,
                               repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fast.count_monotone(d, b, target, connected), number=1,
                               repeat=args.repeat))
        label = f"count mu={','.join(map(str, mu))} b={b}{' conn' if connected else ''}"
        print(f"{label:<28}{tp:>12.4f}{tc:>14.4f}{tp / tc:>9.1f}x")
    lams = [contents(lam) for lam in partitions_of(12)]
    assert all(pure.content_hvector(c, 12) == fast.content_hvector(c, 12) for c in lams)
    tp = min(timeit.repeat(lambda: [pure.content_hvector(c, 12) for c in lams], number=1, repeat=args.repeat))
    tc = min(timeit.repeat(lambda: [fast.content_hvector(c, 12) for c in lams], number=1, repeat=args.repeat))
    print(f"{'h-vectors, all lam |- 12':<28}{tp:>12.4f}{tc:>14.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
