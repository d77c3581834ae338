"""Pure-Python kernels; same contract as the compiled ``_kernels`` module."""
from __future__ import annotations

from typing import List, Sequence


def content_hvector(contents: Sequence[int], bmax: int) -> List[int]:
    """``[h_0, ..., h_bmax]`` of the given integers, from prod (1 - c t)^-1."""
    h = [0] * (bmax + 1)
    h[0] = 1
    for c in contents:
        if c == 0:
            continue
        # multiply by 1/(1 - c t): h[k] += c * h[k-1], ascending k
        for k in range(1, bmax + 1):
            h[k] += c * h[k - 1]
    return h


def count_monotone(d: int, b: int, target: Sequence[int], connected: bool) -> int:
    """Count monotone transposition tuples of length ``b`` with product ``target``.

    Tuples are ``(s_1 t_1) ... (s_b t_b)`` on ``0..d-1`` with ``s_i < t_i`` and
    ``t_1 <= ... <= t_b``; the product is composed right to left.  With
    ``connected`` only tuples generating a transitive group are counted.
    """
    target = list(target)
    cur = list(range(d))
    ss = [0] * b
    ts = [0] * b

    def transitive() -> bool:
        parent = list(range(d))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = d
        for i in range(b):
            a, c = find(ss[i]), find(ts[i])
            if a != c:
                parent[a] = c
                comps -= 1
        return comps == 1

    def dfs(depth: int, tmin: int) -> int:
        if depth == b:
            if cur != target:
                return 0
            return 1 if (not connected or transitive()) else 0
        total = 0
        for t in range(tmin, d):
            ts[depth] = t
            for s in range(t):
                ss[depth] = s
                cur[s], cur[t] = cur[t], cur[s]
                total += dfs(depth + 1, t)
                cur[s], cur[t] = cur[t], cur[s]
        return total

    return dfs(0, 1)
