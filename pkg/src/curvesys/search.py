"""Exact maximum-clique search on bitset graphs.

Graphs are given as a list ``adj`` where ``adj[v]`` is an ``int`` whose set
bits are the neighbours of ``v``.  The search is a branch and bound with a
greedy-colouring upper bound (Tomita-style); it is shared by the symplectic
family search, the torus search and the exact independent-set step.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence


class _Stop(Exception):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def default_workers() -> int:
    """Worker cap from ``CURVESYS_THREADS`` (defaults to 1)."""
    raw = os.environ.get("CURVESYS_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _color_sort(adj, P):
    # greedy colouring; colours[i] bounds the clique size within order[:i+1]
    order, colors = [], []
    color = 0
    U = P
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


class _Searcher:
    def __init__(self, adj, best, stop_at):
        self.adj = adj
        self.best = list(best)
        self.stop_at = stop_at
        self.nodes = 0

    def expand(self, R, P):
        self.nodes += 1
        order, colors = _color_sort(self.adj, P)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + colors[idx] <= len(self.best):
                return
            v = order[idx]
            R.append(v)
            newP = P & self.adj[v]
            if newP:
                self.expand(R, newP)
            elif len(R) > len(self.best):
                self.best = list(R)
                if self.stop_at is not None and len(self.best) >= self.stop_at:
                    raise _Stop
            R.pop()
            P &= ~(1 << v)

    def rooted(self, root, P):
        """Best clique that contains ``root`` and otherwise lies in ``P``."""
        if 1 + popcount(P) <= len(self.best):
            return
        R = [root]
        if P:
            self.expand(R, P)
        elif len(self.best) < 1:
            self.best = [root]


def _greedy_clique(adj, n):
    best = []
    for start in range(n):
        R, P = [start], adj[start]
        while P:
            # neighbour keeping the most candidates alive
            v = max(iter_bits(P), key=lambda u: popcount(P & adj[u]))
            R.append(v)
            P &= adj[v]
        if len(R) > len(best):
            best = R
    return best


def _rooted_task(args):
    adj, root, P, seed, stop_at = args
    s = _Searcher(adj, seed, stop_at)
    try:
        s.rooted(root, P)
    except _Stop:
        pass
    return s.best


def max_clique(
    adj: Sequence[int],
    stop_at: int | None = None,
    workers: int = 1,
) -> list[int]:
    """Return a maximum clique of the graph as a sorted list of vertices.

    ``stop_at`` is an a-priori upper bound on the clique number: the search
    returns as soon as a clique of that size is found.  With ``workers > 1``
    the branch space is partitioned by the first clique vertex (in degree
    order) and the parts are searched in separate processes.
    """
    n = len(adj)
    if n == 0:
        return []
    for v in range(n):
        if adj[v] >> v & 1:
            raise ValueError(f"vertex {v} is adjacent to itself")

    # relabel by decreasing degree; the colouring bound is tighter this way
    order = sorted(range(n), key=lambda v: (-popcount(adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    radj = [0] * n
    for v in range(n):
        bits = 0
        for u in iter_bits(adj[v]):
            bits |= 1 << pos[u]
        radj[pos[v]] = bits

    seed = _greedy_clique(radj, n)
    if stop_at is not None and len(seed) >= stop_at:
        return sorted(order[v] for v in seed)

    later = [radj[i] & ~((1 << (i + 1)) - 1) for i in range(n)]
    if workers > 1 and n > 1:
        tasks = [(radj, i, later[i], seed, stop_at) for i in range(n)]
        best = seed
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for found in pool.map(_rooted_task, tasks, chunksize=max(1, n // (4 * workers))):
                if len(found) > len(best):
                    best = found
    else:
        s = _Searcher(radj, seed, stop_at)
        try:
            for i in range(n):
                s.rooted(i, later[i])
        except _Stop:
            pass
        best = s.best
    return sorted(order[v] for v in best)


def clique_number_bruteforce(adj: Sequence[int]) -> int:
    """Clique number by enumerating all vertex subsets; tiny graphs only."""
    n = len(adj)
    if n > 16:
        raise ValueError("brute force limited to 16 vertices")
    best = 0
    for mask in range(1 << n):
        size = popcount(mask)
        if size <= best:
            continue
        if all((adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask)):
            best = size
    return best
