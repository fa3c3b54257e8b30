"""Exact independent-set search on small graphs via branch and bound.

Vertices are 0..n-1 with adjacency bitmasks.  The search relabels vertices
by descending degree (ties by index) so dense rows are decided early, then
branches on the lowest candidate with a popcount bound.  Output is
deterministic; find-all results are sorted in original vertex order.
"""

from __future__ import annotations


def independent_sets_of_size(
    adj: list[int],
    n: int,
    size: int,
    find_all: bool = False,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    if size == 0:
        return [()]
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-(adj[v].bit_count()), v))
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    radj = [0] * n
    for v in range(n):
        m = adj[v]
        acc = 0
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            acc |= 1 << pos[w]
        radj[pos[v]] = acc

    out: list[tuple[int, ...]] = []
    cap = None if (find_all and limit is None) else (limit or 1)

    def dfs(chosen: tuple[int, ...], cand: int) -> bool:
        if len(chosen) == size:
            out.append(chosen)
            return cap is not None and len(out) >= cap
        need = size - len(chosen)
        if cand.bit_count() < need:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if dfs(chosen + (v,), cand & ~radj[v]):
                return True
            if cand.bit_count() < need:
                return False
        return False

    dfs((), (1 << n) - 1)
    results = sorted(tuple(sorted(order[p] for p in t)) for t in out)
    return results
