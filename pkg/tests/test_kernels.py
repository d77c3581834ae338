from __future__ import annotations

import itertools
import subprocess
import sys

import pytest

from monohurwitz import kernels
from monohurwitz import _kernels_py as pure
from monohurwitz.hurwitz import canonical_permutation
from monohurwitz.partitions import partitions_of


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_python_override():
    code = "import monohurwitz.kernels as k; print(k.BACKEND)"
    env_out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                             env={"MHN_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert env_out.stdout.strip() == "python"


def test_hvector_examples():
    assert pure.content_hvector([0, 1, -1], 2) == [1, 0, 1]
    assert pure.content_hvector([0], 2) == [1, 0, 0]
    assert pure.content_hvector([], 3) == [1, 0, 0, 0]


def _brute_h(values, b):
    return sum(
        _prod(values[i] for i in combo)
        for combo in itertools.combinations_with_replacement(range(len(values)), b))


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


@pytest.mark.parametrize("values", [[0, 1, -1], [2, -3, 5, 0], [1, 1, 1], [-2]])
def test_hvector_matches_symmetric_function_definition(values):
    hv = pure.content_hvector(values, 5)
    assert hv == [_brute_h(values, b) for b in range(6)]


def _brute_count(d, b, target, connected):
    # all monotone tuples listed explicitly, composed right to left
    transpositions = [(s, t) for t in range(d) for s in range(t)]
    count = 0
    for seq in itertools.product(transpositions, repeat=b):
        if any(seq[i][1] > seq[i + 1][1] for i in range(b - 1)):
            continue
        perm = list(range(d))
        for s, t in seq:
            swap = {s: t, t: s}
            perm = [perm[swap.get(x, x)] for x in range(d)]
        if perm != target:
            continue
        if connected:
            parent = list(range(d))

            def find(a):
                while parent[a] != a:
                    a = parent[a]
                return a
            for s, t in seq:
                parent[find(s)] = find(t)
            for x in range(d):
                parent[find(x)] = find(target[x])
            if len({find(x) for x in range(d)}) != 1:
                continue
        count += 1
    return count


@pytest.mark.parametrize("d", range(1, 5))
def test_count_matches_explicit_enumeration(d):
    for mu in partitions_of(d):
        target = canonical_permutation(mu)
        for b in range(0, 5):
            for connected in (False, True):
                assert pure.count_monotone(d, b, target, connected) == _brute_count(d, b, target, connected)


@pytest.mark.skipif(kernels.compiled is None, reason="compiled extension not built")
@pytest.mark.parametrize("d", range(1, 7))
def test_compiled_matches_pure(d):
    for mu in partitions_of(d):
        target = canonical_permutation(mu)
        for b in range(0, 6 if d < 6 else 4):
            for connected in (False, True):
                assert kernels.compiled.count_monotone(d, b, target, connected) == \
                    pure.count_monotone(d, b, target, connected)
    values = list(range(-d, d))
    assert kernels.compiled.content_hvector(values, 6) == pure.content_hvector(values, 6)
