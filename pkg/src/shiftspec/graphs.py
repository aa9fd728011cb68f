"""Structure of finite self-maps: cycles, periods, components, closures.

A finite self-map ``phi`` on ``{0..n-1}`` decomposes into disjoint weak
components, each a single cycle with trees hanging off it.  Every node is
quasi-periodic (its orbit repeats); the wandering classification exists in
the shared vocabulary only for the co-finite infinite presentations, a
finite analysis never emits it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class PointClass(enum.Enum):
    """Orbit classification of a single point under iteration."""

    WANDERING = "wandering"
    QUASI_PERIODIC = "quasi-periodic"
    PERIODIC = "periodic"


class FunctionalGraph:
    """A total self-map on ``{0..n-1}``, stored as the image array ``phi``."""

    __slots__ = ("n", "phi")

    def __init__(self, phi: Iterable[int]):
        phi = tuple(int(v) for v in phi)
        n = len(phi)
        if n == 0:
            raise ValueError("a functional graph needs at least one node")
        for i, v in enumerate(phi):
            if not 0 <= v < n:
                raise ValueError(f"phi[{i}] = {v} is outside [0, {n})")
        self.n = n
        self.phi = phi

    def step(self, node: int, k: int = 1) -> int:
        """phi applied k >= 0 times to node."""
        for _ in range(k):
            node = self.phi[node]
        return node

    def __eq__(self, other):
        return isinstance(other, FunctionalGraph) and other.phi == self.phi

    def __hash__(self):
        return hash(self.phi)

    def __repr__(self):
        return f"FunctionalGraph({list(self.phi)})"


@dataclass(frozen=True)
class GraphAnalysis:
    """Complete orbit structure of a :class:`FunctionalGraph`.

    ``cycles`` are canonical: each cycle starts at its smallest node and
    follows phi, and cycles are sorted by that smallest node.  Component ids
    are dense and ordered by each component's smallest member.
    """

    graph: FunctionalGraph
    on_cycle: tuple[bool, ...]
    period: tuple[int | None, ...]
    cycle_id: tuple[int, ...]
    component_id: tuple[int, ...]
    tail_len: tuple[int, ...]
    cycles: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def component_count(self) -> int:
        return max(self.component_id) + 1

    def component_members(self, comp: int) -> tuple[int, ...]:
        return tuple(i for i in range(self.graph.n) if self.component_id[i] == comp)

    def point_class(self, node: int) -> PointClass:
        return PointClass.PERIODIC if self.on_cycle[node] else PointClass.QUASI_PERIODIC


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def analyze(graph: FunctionalGraph) -> GraphAnalysis:
    """Discover all cycles, periods, tail distances and weak components.

    Each node is walked once with three-state marking, so the whole analysis
    is linear apart from the near-constant union-find factor.
    """
    n, phi = graph.n, graph.phi
    state = [0] * n  # 0 unseen, 1 on current walk, 2 finished
    cycle_id = [-1] * n
    tail_len = [0] * n
    on_cycle = [False] * n
    raw_cycles: list[list[int]] = []

    for start in range(n):
        if state[start]:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        u = start
        while state[u] == 0:
            state[u] = 1
            pos[u] = len(path)
            path.append(u)
            u = phi[u]
        if state[u] == 1:
            # the walk closed a brand-new cycle at u
            i = pos[u]
            cyc = path[i:]
            cid = len(raw_cycles)
            raw_cycles.append(cyc)
            for v in cyc:
                on_cycle[v] = True
                cycle_id[v] = cid
                tail_len[v] = 0
            for j in range(i - 1, -1, -1):
                cycle_id[path[j]] = cid
                tail_len[path[j]] = i - j
        else:
            # the walk ran into already-finished structure at u
            cid = cycle_id[u]
            base = tail_len[u]
            for j in range(len(path) - 1, -1, -1):
                cycle_id[path[j]] = cid
                tail_len[path[j]] = base + (len(path) - j)
        for v in path:
            state[v] = 2

    # canonical cycle order: rotate to smallest node, sort by that node
    canon: list[tuple[int, ...]] = []
    for cyc in raw_cycles:
        k = cyc.index(min(cyc))
        canon.append(tuple(cyc[k:] + cyc[:k]))
    order = sorted(range(len(canon)), key=lambda i: canon[i][0])
    remap = {old: new for new, old in enumerate(order)}
    cycles = tuple((canon[i], len(canon[i])) for i in order)
    cycle_id = [remap[c] for c in cycle_id]

    period: list[int | None] = [None] * n
    for nodes, length in cycles:
        for v in nodes:
            period[v] = length

    uf = _UnionFind(n)
    for a in range(n):
        uf.union(a, phi[a])
    roots: dict[int, int] = {}
    component_id = [0] * n
    for v in range(n):  # ascending, so ids follow each component's least node
        r = uf.find(v)
        if r not in roots:
            roots[r] = len(roots)
        component_id[v] = roots[r]

    return GraphAnalysis(
        graph=graph,
        on_cycle=tuple(on_cycle),
        period=tuple(period),
        cycle_id=tuple(cycle_id),
        component_id=tuple(component_id),
        tail_len=tuple(tail_len),
        cycles=cycles,
    )


def image(graph: FunctionalGraph, nodes: Iterable[int]) -> frozenset[int]:
    """The set phi(S)."""
    return frozenset(graph.phi[v] for v in nodes)


def down_closure(graph: FunctionalGraph, targets: Iterable[int]) -> frozenset[int]:
    """All nodes whose forward orbit eventually lands in ``targets``.

    This is the downward closure of the target set under the reachability
    preorder, i.e. the union of all iterated preimages.  Memoized forward
    walking; a cycle belongs to the closure exactly when it intersects the
    targets.
    """
    n = graph.n
    answer: list[bool | None] = [None] * n
    for t in targets:
        if not 0 <= t < n:
            raise ValueError(f"target {t} is outside [0, {n})")
        answer[t] = True
    for start in range(n):
        if answer[start] is not None:
            continue
        path: list[int] = []
        in_path: set[int] = set()
        u = start
        while answer[u] is None and u not in in_path:
            in_path.add(u)
            path.append(u)
            u = graph.phi[u]
        verdict = False if answer[u] is None else answer[u]
        for v in path:
            answer[v] = verdict
    return frozenset(v for v in range(n) if answer[v])


def orbit_meet(graph: FunctionalGraph, a: int, b: int) -> tuple[int, int] | None:
    """Minimal exponents p, q >= 1 with phi^p(a) == phi^q(b), or None.

    Ties break lexicographically: smallest p first, then smallest q.  A meet
    exists exactly when a and b share a weak component, and is always found
    within 2n steps on either side.
    """
    n = graph.n
    for node in (a, b):
        if not 0 <= node < n:
            raise ValueError(f"node {node} is outside [0, {n})")
    bound = 2 * n
    first_q: dict[int, int] = {}
    x = b
    for q in range(1, bound + 1):
        x = graph.phi[x]
        if x not in first_q:
            first_q[x] = q
    y = a
    for p in range(1, bound + 1):
        y = graph.phi[y]
        q = first_q.get(y)
        if q is not None:
            return (p, q)
    return None
