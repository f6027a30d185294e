"""Girth via symmetry-reduced truncated traversal trees, plus a naive oracle.

Rotation by 2b labels is an automorphism, so every shortest cycle can be
rotated to pass through one of the labels 1..2b.  A truncated breadth-first
tree is grown from each such root: every node expands to its three neighbors
minus the edge back to its parent, and the tree stops at the first depth
whose completed layer repeats a label already in the tree.  A label seen at
depths s and t closes a walk of length s+t >= girth, with equality achieved
in at least one of the 2b trees, so the minimum over roots is the girth.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import MalformedGraph, RootOutOfRange
from .graphs import ChordIndexSpec, HbGraph, build_graph

__all__ = [
    "RepeatEvent",
    "TraversalTree",
    "GirthResult",
    "traverse",
    "girth_symmetric",
    "girth_oracle",
]

_KINDS = ("prev", "next", "chord")


@dataclass(frozen=True)
class RepeatEvent:
    label: int
    first_depth: int
    second_depth: int

    @property
    def cycle_length(self) -> int:
        return self.first_depth + self.second_depth


@dataclass(frozen=True)
class TraversalTree:
    """Truncated BFS tree from one root.

    layers[k] lists the depth-k nodes as (label, parent-edge kind) in
    generation order; the root's kind is None.  labels/parents/parent_kinds
    give the per-node view used to reconstruct root-to-node paths, and
    event_nodes holds the node ids of the two occurrences behind
    repeat_event.
    """

    root: int
    layers: tuple[tuple[tuple[int, Optional[str]], ...], ...]
    repeat_event: Optional[RepeatEvent]
    labels: tuple[int, ...] = field(repr=False, default=())
    parents: tuple[int, ...] = field(repr=False, default=())
    parent_kinds: tuple[Optional[str], ...] = field(repr=False, default=())
    event_nodes: Optional[tuple[int, int]] = field(repr=False, default=None)

    def path_labels(self, node: int) -> list[int]:
        out = []
        while node != -1:
            out.append(self.labels[node])
            node = self.parents[node]
        out.reverse()
        return out


@dataclass(frozen=True)
class GirthResult:
    girth: int
    witness: tuple[int, ...]
    root_used: int


def _grow_tree(root: int, step: Callable[[int], tuple[int, int, int]], max_depth: int) -> TraversalTree:
    """Generic truncated traversal; step(x) yields (prev, next, chord) labels.

    Layers are completed before the repeat check, so all repeats surfacing at
    the halting depth are visible; the recorded event is the one minimizing
    (depth sum, label, generation order).
    """
    labels = [root]
    parents = [-1]
    kinds: list[Optional[int]] = [None]
    depths = [0]
    layers: list[tuple[int, Optional[str]]] = [[(root, None)]]
    first_seen = {root: 0}
    frontier = [0]

    for depth in range(1, max_depth + 1):
        layer = []
        nxt = []
        candidates = []  # (depth_sum, label, second_node_id, first_node_id)
        for node in frontier:
            x = labels[node]
            pl = labels[parents[node]] if parents[node] != -1 else 0
            for kind, y in enumerate(step(x)):
                if y == pl and parents[node] != -1:
                    continue  # never re-traverse the parent edge
                nid = len(labels)
                labels.append(y)
                parents.append(node)
                kinds.append(kind)
                depths.append(depth)
                layer.append((y, _KINDS[kind]))
                seen = first_seen.get(y)
                if seen is None:
                    first_seen[y] = nid
                    nxt.append(nid)
                else:
                    candidates.append((depths[seen] + depth, y, nid, seen))
                    nxt.append(nid)  # kept in the tree; never expanded further
        layers.append(layer)
        if candidates:
            total, label, second, first = min(candidates)
            return TraversalTree(
                root=root,
                layers=tuple(tuple(l) for l in layers),
                repeat_event=RepeatEvent(label, depths[first], depths[second]),
                labels=tuple(labels),
                parents=tuple(parents),
                parent_kinds=tuple(None if k is None else _KINDS[k] for k in kinds),
                event_nodes=(first, second),
            )
        frontier = nxt
    raise MalformedGraph(f"traversal from {root} exceeded depth {max_depth} without a repeat")


def _graph_step(graph: HbGraph) -> Callable[[int], tuple[int, int, int]]:
    n = graph.order
    chord = graph.chord_of

    def step(x: int) -> tuple[int, int, int]:
        return (n if x == 1 else x - 1, 1 if x == n else x + 1, chord[x - 1] + 1)

    return step


def traverse(root: int, spec: ChordIndexSpec) -> TraversalTree:
    """Truncated BFS tree from root h, 1 <= h <= 2b."""
    graph = build_graph(spec)  # raises InvalidSpec on bad input
    if not 1 <= root <= 2 * spec.sym_factor:
        raise RootOutOfRange(f"root {root} outside 1..{2 * spec.sym_factor}")
    return _grow_tree(root, _graph_step(graph), graph.order + 2)


def _extract_witness(tree: TraversalTree) -> list[int]:
    first, second = tree.event_nodes
    p1 = []
    node = first
    while node != -1:
        p1.append(node)
        node = tree.parents[node]
    p1.reverse()
    p2 = []
    node = second
    while node != -1:
        p2.append(node)
        node = tree.parents[node]
    p2.reverse()
    shared = 0
    while shared < len(p1) and shared < len(p2) and p1[shared] == p2[shared]:
        shared += 1
    down = [tree.labels[i] for i in p2[shared - 1 :]]
    down.reverse()
    up = [tree.labels[i] for i in p1[shared:]]
    return down + up


def _verify_cycle(graph: HbGraph, seq: list[int], length: int) -> None:
    ok = (
        len(seq) == length + 1
        and seq[0] == seq[-1]
        and len(set(seq[:-1])) == length
        and all(graph.has_edge(a, b) for a, b in zip(seq, seq[1:]))
    )
    if not ok:
        raise MalformedGraph(f"internal error: witness {seq} fails verification")


def girth_symmetric(spec: ChordIndexSpec) -> GirthResult:
    """Exact girth from the 2b traversal trees, with a verified witness cycle.

    The lowest root attaining the minimum wins; the returned witness is
    re-checked edge by edge against the realized graph before returning.
    """
    graph = build_graph(spec)
    step = _graph_step(graph)
    b = spec.sym_factor
    best = None
    for h in range(1, 2 * b + 1):
        tree = _grow_tree(h, step, graph.order + 2)
        total = tree.repeat_event.cycle_length
        if best is None or total < best[0]:
            best = (total, h, tree)
    girth, root, tree = best
    witness = _extract_witness(tree)
    _verify_cycle(graph, witness, girth)
    return GirthResult(girth, tuple(witness), root)


def girth_oracle(graph: HbGraph) -> int:
    """Exact girth with no symmetry assumption: BFS from every vertex.

    Each non-tree edge (u, w) met during the BFS from a source closes a walk
    of dist(u)+dist(w)+1 edges through that source; the minimum over all
    sources and edges is the girth.  Sources stop expanding once they can no
    longer beat the best cycle found.
    """
    n = graph.order
    chord = graph.chord_of
    adj = [((i - 1) % n, (i + 1) % n, chord[i]) for i in range(n)]
    best = n  # the Hamiltonian cycle
    for src in range(n):
        if best == 4:
            break  # bipartite simple graphs cannot do better
        dist = [-1] * n
        parent = [-1] * n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and u != parent[w]:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
    return best
