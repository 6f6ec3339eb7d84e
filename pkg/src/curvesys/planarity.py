"""Exact planarity tests for small graphs.

Two independent routes:

* :func:`is_planar_graph` splits the graph into biconnected blocks and runs
  the Demoucron-Malgrange-Pertuiset face-insertion algorithm on each block;
  it builds an explicit embedding, so it is fast enough for the 2g+2 vertex
  triangulations used by the hyperelliptic construction.
* :func:`has_kuratowski_minor` searches for a K5 or K3,3 minor by
  deletion/contraction with memoization.  It is exponential and meant for
  graphs with at most 8 or so vertices, where it serves as an oracle.

Graphs are given as a vertex count ``n`` (vertices ``0..n-1``) and an
iterable of edges.
"""

from __future__ import annotations

from collections import defaultdict, deque
from functools import lru_cache
from typing import Iterable


def _adjacency(n, edges):
    adj = defaultdict(set)
    for v in range(n):
        adj[v]
    for a, b in edges:
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        adj[a].add(b)
        adj[b].add(a)
    return adj


def biconnected_blocks(n: int, edges: Iterable[tuple[int, int]]) -> list[set[tuple[int, int]]]:
    """Edge sets of the biconnected components (bridges form their own blocks)."""
    adj = _adjacency(n, edges)
    disc, low = {}, {}
    blocks, stack = [], []
    counter = [0]

    def dfs(u, parent):
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        for w in adj[u]:
            if w == parent:
                continue
            if w not in disc:
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(tuple(sorted(e)))
                        if e == (u, w):
                            break
                    blocks.append(block)
            elif disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in list(adj):
        if v not in disc:
            dfs(v, None)
    return blocks


def _find_cycle(adj, start):
    parent = {start: None}
    stack = [(start, iter(adj[start]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if w == parent[u]:
                continue
            if w in parent:
                # back edge u-w closes a cycle through the tree path
                cycle = [u]
                x = u
                while x != w:
                    x = parent[x]
                    cycle.append(x)
                return cycle
            parent[w] = u
            stack.append((w, iter(adj[w])))
            break
        else:
            stack.pop()
    return None


def _block_is_planar(block_edges, euler):
    adj = defaultdict(set)
    for a, b in block_edges:
        adj[a].add(b)
        adj[b].add(a)
    nv, ne = len(adj), len(block_edges)
    if nv <= 4:
        return True
    if euler and ne > 3 * nv - 6:
        return False

    cycle = _find_cycle(adj, next(iter(adj)))
    placed = set(cycle)
    placed_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]

    while len(placed_edges) < ne:
        fragments = []  # (attachments, path-finder input)
        for a, b in block_edges:
            if a in placed and b in placed and frozenset((a, b)) not in placed_edges:
                fragments.append(({a, b}, [a, b]))
        seen = set()
        for v in adj:
            if v in placed or v in seen:
                continue
            comp, attach = {v}, set()
            queue = deque([v])
            seen.add(v)
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y in placed:
                        attach.add(y)
                    elif y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            fragments.append((attach, comp))

        best = None
        for attach, body in fragments:
            admissible = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not admissible:
                return False
            if best is None or len(admissible) < len(best[2]):
                best = (attach, body, admissible)
            if len(admissible) == 1:
                break
        attach, body, admissible = best

        if isinstance(body, list):
            path = body
        else:
            path = _path_through(adj, body, attach)
        face = faces.pop(admissible[0])
        faces.extend(_split_face(face, path))
        placed.update(path)
        placed_edges.update(frozenset((path[i], path[i + 1])) for i in range(len(path) - 1))
    return True


def _path_through(adj, comp, attach):
    # BFS from one attachment through the component to a different attachment
    start = min(attach)
    prev = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in prev:
                continue
            if y in comp:
                prev[y] = x
                queue.append(y)
            elif y in attach and y != start and x != start:
                path = [y, x]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
    raise AssertionError("fragment of a biconnected block has a single attachment")


def _split_face(face, path):
    u, v, interior = path[0], path[-1], path[1:-1]
    i = face.index(u)
    rot = face[i:] + face[:i]
    j = rot.index(v)
    return [rot[: j + 1] + interior[::-1], rot[j:] + [u] + interior]


def is_planar_graph(n: int, edges: Iterable[tuple[int, int]], euler_prefilter: bool = True) -> bool:
    """Exact planarity test by explicit embedding of every biconnected block.

    ``euler_prefilter`` rejects graphs with more than ``3V - 6`` edges before
    embedding; switching it off changes speed, never the answer.
    """
    edges = {tuple(sorted(e)) for e in edges}
    if euler_prefilter and n >= 3 and len(edges) > 3 * n - 6:
        return False
    return all(_block_is_planar(b, euler_prefilter) for b in biconnected_blocks(n, edges))


def _reduce(edges: frozenset) -> frozenset:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices (planarity-preserving)."""
    edges = set(edges)
    changed = True
    while changed:
        changed = False
        adj = defaultdict(set)
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        for v, nb in adj.items():
            if len(nb) <= 1:
                edges -= {tuple(sorted((v, w))) for w in nb}
                changed = True
                break
            if len(nb) == 2:
                x, y = sorted(nb)
                edges -= {tuple(sorted((v, x))), tuple(sorted((v, y)))}
                edges.add((x, y))
                changed = True
                break
    verts = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(verts)}
    return frozenset(tuple(sorted((relabel[a], relabel[b]))) for a, b in edges)


def _is_k33(edges):
    verts = {v for e in edges for v in e}
    if len(verts) != 6 or len(edges) != 9:
        return False
    adj = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    if any(len(adj[v]) != 3 for v in verts):
        return False
    side = {min(verts): 0}
    queue = deque([min(verts)])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in side:
                side[y] = 1 - side[x]
                queue.append(y)
            elif side[y] == side[x]:
                return False
    return True


@lru_cache(maxsize=None)
def _has_minor(edges: frozenset) -> bool:
    nv = len({v for e in edges for v in e})
    ne = len(edges)
    if nv < 5 or ne < 9:
        return False
    if nv == 5 and ne == 10:
        return True
    if _is_k33(edges):
        return True
    for e in sorted(edges):
        if _has_minor(_reduce(edges - {e})):
            return True
        u, v = e
        contracted = set()
        for a, b in edges - {e}:
            a, b = (u if a == v else a), (u if b == v else b)
            if a != b:
                contracted.add(tuple(sorted((a, b))))
        if _has_minor(_reduce(frozenset(contracted))):
            return True
    return False


def has_kuratowski_minor(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the graph has a K5 or K3,3 minor, i.e. is non-planar (Wagner)."""
    edges = frozenset(tuple(sorted(e)) for e in edges)
    for a, b in edges:
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"bad edge ({a}, {b})")
    return _has_minor(_reduce(edges))
