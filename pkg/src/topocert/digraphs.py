"""Directed graphs, canonical certificates and isomorphism.

Certificates are computed by iterated color refinement (seeded with in/out
degrees and, on DAGs, the longest-path level) followed by backtracking over
ambiguous color classes, minimizing the adjacency encoding.  Disconnected
graphs are canonicalized component by component, which keeps the search small
for the antichain-heavy graphs this package produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional, Sequence

from .errors import CapExceeded

DEFAULT_VERTEX_CAP = 40
# Defensive bound on backtracking leaves; far above anything the test corpus
# or the poset graphs in scope can reach.
_SEARCH_LEAF_CAP = 500_000


@dataclass(frozen=True)
class CanonicalCert:
    """Canonical certificate: equal certs iff isomorphic digraphs."""

    vertex_count: int
    blob: bytes

    def hex(self) -> str:
        return self.blob.hex()


@dataclass(frozen=True)
class DiGraph:
    """Immutable digraph on vertices 0..n-1 without self-loops.

    ``labels``, when present, carries one frozenset per vertex (the h-class
    behind the vertex); it is ignored by isomorphism and certificates.
    """

    n: int
    edges: frozenset
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("digraph needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at {u} not allowed")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    @cached_property
    def out_sets(self) -> tuple:
        out = [set() for _ in range(self.n)]
        for u, v in self.edges:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_sets(self) -> tuple:
        inc = [set() for _ in range(self.n)]
        for u, v in self.edges:
            inc[v].add(u)
        return tuple(frozenset(s) for s in inc)

    @cached_property
    def sinks(self) -> tuple:
        return tuple(v for v in range(self.n) if not self.out_sets[v])


def relabel(g: DiGraph, perm: Sequence[int]) -> DiGraph:
    """Relabeled copy: vertex v becomes perm[v]."""
    edges = frozenset((perm[u], perm[v]) for u, v in g.edges)
    labels = None
    if g.labels is not None:
        out = [None] * g.n
        for v, lab in enumerate(g.labels):
            out[perm[v]] = lab
        labels = tuple(out)
    return DiGraph(n=g.n, edges=edges, labels=labels)


def topological_order(g: DiGraph) -> Optional[list]:
    """Kahn topological order, or None if the graph has a directed cycle."""
    indeg = [len(g.in_sets[v]) for v in range(g.n)]
    queue = sorted(v for v in range(g.n) if indeg[v] == 0)
    order = []
    while queue:
        v = queue.pop(0)
        order.append(v)
        for w in sorted(g.out_sets[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return order if len(order) == g.n else None


def find_cycle(g: DiGraph) -> list:
    """Some directed cycle, as a vertex list; assumes one exists."""
    color = [0] * g.n  # 0 fresh, 1 on stack, 2 done
    stack: list = []

    def dfs(v):
        color[v] = 1
        stack.append(v)
        for w in sorted(g.out_sets[v]):
            if color[w] == 1:
                return stack[stack.index(w):]
            if color[w] == 0:
                found = dfs(w)
                if found:
                    return found
        stack.pop()
        color[v] = 2
        return None

    for v in range(g.n):
        if color[v] == 0:
            cyc = dfs(v)
            if cyc:
                return cyc
    raise ValueError("graph is acyclic")


def _dag_levels(g: DiGraph) -> Optional[list]:
    order = topological_order(g)
    if order is None:
        return None
    level = [0] * g.n
    for v in order:
        for u in g.in_sets[v]:
            level[v] = max(level[v], level[u] + 1)
    return level


def _normalize(keys: list) -> list:
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [rank[k] for k in keys]


def _refine(g: DiGraph, colors: list) -> list:
    """Stable color refinement; colors come out rank-normalized."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in g.out_sets[v])),
                tuple(sorted(colors[w] for w in g.in_sets[v])),
            )
            for v in range(g.n)
        ]
        new = _normalize(sigs)
        k = len(set(new))
        if k == ncolors:
            return new
        colors, ncolors = new, k


def _individualize(colors: list, v: int) -> list:
    return _normalize([(c, 0 if u == v else 1) for u, c in enumerate(colors)])


def _twins(g: DiGraph, u: int, v: int) -> bool:
    """True when swapping u and v is provably an automorphism."""
    if (g.out_sets[u] - {v}) != (g.out_sets[v] - {u}):
        return False
    if (g.in_sets[u] - {v}) != (g.in_sets[v] - {u}):
        return False
    return ((u, v) in g.edges) == ((v, u) in g.edges)


def _encode_rows(g: DiGraph, order: list) -> tuple:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for u, v in g.edges:
        rows[pos[u]] |= 1 << (g.n - 1 - pos[v])
    return tuple(rows)


def _search_connected(g: DiGraph) -> tuple:
    """Min adjacency encoding over refinement-compatible orderings."""
    levels = _dag_levels(g)
    if levels is None:
        seed = [(len(g.out_sets[v]), len(g.in_sets[v])) for v in range(g.n)]
    else:
        seed = [
            (len(g.out_sets[v]), len(g.in_sets[v]), levels[v]) for v in range(g.n)
        ]
    start = _refine(g, _normalize(seed))
    best: list = [None, None]  # rows, order
    leaves = [0]

    def rec(colors):
        cells: dict = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            leaves[0] += 1
            if leaves[0] > _SEARCH_LEAF_CAP:
                raise CapExceeded("canonicalization search leaves",
                                  _SEARCH_LEAF_CAP, leaves[0])
            order = sorted(range(g.n), key=colors.__getitem__)
            rows = _encode_rows(g, order)
            if best[0] is None or rows < best[0]:
                best[0], best[1] = rows, order
            return
        tried: list = []
        for v in sorted(target):
            if any(_twins(g, v, u) for u in tried):
                continue
            tried.append(v)
            rec(_refine(g, _individualize(colors, v)))

    rec(start)
    return best[0], best[1]


def _weak_components(g: DiGraph) -> list:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.out_sets[v] | g.in_sets[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _induced(g: DiGraph, verts: list) -> DiGraph:
    pos = {v: i for i, v in enumerate(verts)}
    edges = frozenset(
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    )
    return DiGraph(n=len(verts), edges=edges)


@lru_cache(maxsize=65536)
def _canonical_order_key(n: int, edges: frozenset) -> tuple:
    g = DiGraph(n=n, edges=edges)
    comps = _weak_components(g)
    if len(comps) == 1:
        rows, order = _search_connected(g)
        return tuple(rows), tuple(order)
    pieces = []
    for comp in comps:
        sub = _induced(g, comp)
        rows, order = _search_connected(sub)
        # components sort by (size, local encoding); min original vertex only
        # breaks ties between isomorphic components, deterministically
        pieces.append((len(comp), tuple(rows), comp[0], [comp[i] for i in order]))
    pieces.sort(key=lambda p: (p[0], p[1], p[2]))
    order = [v for p in pieces for v in p[3]]
    return _encode_rows(g, order), tuple(order)


def canonical_order(g: DiGraph) -> list:
    """Vertex ordering realizing the canonical adjacency encoding."""
    _, order = _canonical_order_key(g.n, g.edges)
    return list(order)


def canonical_cert(g: DiGraph, cap: int = DEFAULT_VERTEX_CAP) -> CanonicalCert:
    """Canonical certificate of ``g``; equal certs iff isomorphic graphs."""
    if g.n > cap:
        raise CapExceeded("graph vertices for canonicalization", cap, g.n)
    rows, _ = _canonical_order_key(g.n, g.edges)
    width = (g.n + 7) // 8
    blob = g.n.to_bytes(4, "big") + b"".join(r.to_bytes(width, "big") for r in rows)
    return CanonicalCert(vertex_count=g.n, blob=blob)


def is_isomorphic(g1: DiGraph, g2: DiGraph,
                  cap: int = DEFAULT_VERTEX_CAP) -> tuple:
    """(True, witness bijection) when isomorphic, else (False, None).

    The witness maps vertices of g1 to vertices of g2 and is re-validated
    edge by edge in both directions before being returned.
    """
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False, None
    if canonical_cert(g1, cap) != canonical_cert(g2, cap):
        return False, None
    o1 = canonical_order(g1)
    o2 = canonical_order(g2)
    mapping = {o1[i]: o2[i] for i in range(g1.n)}
    for u, v in g1.edges:
        if (mapping[u], mapping[v]) not in g2.edges:
            raise AssertionError("certificate collision: invalid witness")
    inverse = {b: a for a, b in mapping.items()}
    for u, v in g2.edges:
        if (inverse[u], inverse[v]) not in g1.edges:
            raise AssertionError("certificate collision: invalid witness")
    return True, mapping


def _label_text(label) -> str:
    return "{" + ",".join(str(x) for x in sorted(label)) + "}"


def to_dot(g: DiGraph) -> str:
    """Deterministic DOT rendering; vertices carry h-class labels if present."""
    lines = ["digraph {"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  v{v} [label="{_label_text(g.labels[v])}"];')
        else:
            lines.append(f"  v{v};")
    for u, v in sorted(g.edges):
        lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
