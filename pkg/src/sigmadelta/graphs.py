"""Immutable simple graphs on vertex labels 0..n-1.

Adjacency is stored as one Python int bitmask per vertex (bit v of
``adj[u]`` set iff {u, v} is an edge).  Python ints are arbitrary-width,
so a single representation covers every graph size; the practical limits
of the package come from the exponential algorithms, not from here.

All operations return new graphs; graphs and vertex sets are immutable
and safe to share between threads or workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from random import Random
from typing import Iterable, Iterator

from .errors import InvalidArgumentError

__all__ = [
    "Graph",
    "ComponentSplit",
    "Relabeling",
    "bits",
    "mask_of",
    "delete_vertices",
    "deletion_relabeling",
    "neighborhood",
    "disjoint_union",
    "connected_components",
    "distance",
    "split_by_sets",
    "generate_family",
    "enumerate_labeled_graphs",
    "random_graph",
    "random_tree",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "star_graph",
    "grid_graph",
    "FAMILY_KINDS",
]

LABELED_ENUMERATION_CAP = 7


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Invariants (enforced at construction): adjacency is symmetric, has no
    self-loops, and only references vertices in range.
    """

    __slots__ = ("n", "adj", "_sigma_engine")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidArgumentError(f"vertex count must be >= 0, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(masks))
        object.__setattr__(self, "_sigma_engine", None)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build from per-vertex adjacency bitmasks, checking the invariants."""
        masks = tuple(masks)
        n = len(masks)
        full = (1 << n) - 1
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", masks)
        object.__setattr__(g, "_sigma_engine", None)
        for v, m in enumerate(masks):
            if m & ~full:
                raise InvalidArgumentError(f"adjacency of vertex {v} references a vertex >= {n}")
            if m >> v & 1:
                raise InvalidArgumentError(f"self-loop at vertex {v}")
            for u in bits(m):
                if not masks[u] >> v & 1:
                    raise InvalidArgumentError(f"asymmetric adjacency between {u} and {v}")
        return g

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Graph is immutable")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidArgumentError(f"vertex {v!r} out of range for n={self.n}")

    def vertex_mask(self, vertices: Iterable[int]) -> int:
        """Validate a vertex subset of this graph and pack it into a bitmask."""
        m = 0
        for v in vertices:
            self.check_vertex(v)
            m |= 1 << v
        return m

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class Relabeling:
    """Compact, order-preserving relabeling after a vertex deletion.

    ``new_to_old[i]`` is the original label of new vertex ``i``; surviving
    vertices keep their relative order.
    """

    new_to_old: tuple[int, ...]

    @property
    def old_to_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.new_to_old)}

    def map_to_new(self, vertices: Iterable[int]) -> frozenset[int]:
        """Map surviving original labels into the deleted graph; deleted ones vanish."""
        table = self.old_to_new
        return frozenset(table[v] for v in vertices if v in table)

    def map_to_old(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.new_to_old[v] for v in vertices)


def deletion_relabeling(g: Graph, w: Iterable[int]) -> Relabeling:
    wmask = g.vertex_mask(w)
    return Relabeling(tuple(v for v in range(g.n) if not wmask >> v & 1))


def delete_vertices(g: Graph, w: Iterable[int]) -> Graph:
    """Return ``g`` with the vertices of ``w`` (and incident edges) removed.

    Survivors are relabeled compactly and order-preservingly to
    0..n-|w|-1; recover the label maps with :func:`deletion_relabeling`.
    """
    wmask = g.vertex_mask(w)
    kept = [v for v in range(g.n) if not wmask >> v & 1]
    position = {old: new for new, old in enumerate(kept)}
    masks = []
    for old in kept:
        m = 0
        for u in bits(g.adj[old] & ~wmask):
            m |= 1 << position[u]
        masks.append(m)
    return Graph.from_masks(masks)


def neighborhood(g: Graph, w: Iterable[int]) -> frozenset[int]:
    """Open neighborhood N(w): all vertices adjacent to a member of ``w``.

    May intersect ``w`` itself (members adjacent to other members).
    """
    wmask = g.vertex_mask(w)
    m = 0
    for v in bits(wmask):
        m |= g.adj[v]
    return frozenset(bits(m))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted up by ``g1.n``."""
    shift = g1.n
    masks = list(g1.adj) + [m << shift for m in g2.adj]
    return Graph.from_masks(masks)


def _component_mask(adj: tuple[int, ...], start: int, within: int) -> int:
    """Bitmask of the connected component of ``start`` inside ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v]
        frontier = grow & within & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertices into components, ordered by smallest member."""
    remaining = g.full_mask
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(g.adj, start, remaining)
        out.append(frozenset(bits(comp)))
        remaining &= ~comp
    return out


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path distance; ``math.inf`` when u and v are disconnected."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    target = 1 << v
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        grow = 0
        for w in bits(frontier):
            grow |= g.adj[w]
        frontier = grow & ~seen
        if frontier & target:
            return d
        seen |= frontier
    return math.inf


@dataclass(frozen=True)
class ComponentSplit:
    """Vertices of G grouped by how their components meet two sets A and B.

    ``part_a``: components meeting A only; ``part_b``: B only;
    ``part_ab``: both; ``part_star``: neither.  The four parts are
    pairwise disjoint and their union is V.
    """

    part_a: frozenset[int]
    part_b: frozenset[int]
    part_ab: frozenset[int]
    part_star: frozenset[int]


def split_by_sets(g: Graph, a: Iterable[int], b: Iterable[int]) -> ComponentSplit:
    amask = g.vertex_mask(a)
    bmask = g.vertex_mask(b)
    parts = {"a": 0, "b": 0, "ab": 0, "star": 0}
    remaining = g.full_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(g.adj, start, remaining)
        remaining &= ~comp
        hits_a = bool(comp & amask)
        hits_b = bool(comp & bmask)
        key = "ab" if hits_a and hits_b else "a" if hits_a else "b" if hits_b else "star"
        parts[key] |= comp
    return ComponentSplit(
        part_a=frozenset(bits(parts["a"])),
        part_b=frozenset(bits(parts["b"])),
        part_ab=frozenset(bits(parts["ab"])),
        part_star=frozenset(bits(parts["star"])),
    )


# ---------------------------------------------------------------------------
# Deterministic test families


def path_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidArgumentError("path length must be >= 0 vertices")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError("cycle requires >= 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidArgumentError("size must be >= 0")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise InvalidArgumentError("part sizes must be >= 0")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    """Star with one center (vertex 0) and ``leaves`` leaves."""
    return complete_bipartite_graph(1, leaves)


def grid_graph(rows: int, cols: int) -> Graph:
    if rows < 0 or cols < 0:
        raise InvalidArgumentError("grid sizes must be >= 0")
    if rows == 0 or cols == 0:
        return Graph(0)

    def idx(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph(rows * cols, edges)


FAMILY_KINDS = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "star": (star_graph, 1),
    "grid": (grid_graph, 2),
}


def generate_family(kind: str, params: Iterable[int]) -> Graph:
    """Dispatch to a named deterministic family: path, cycle, complete,
    complete_bipartite, star, grid."""
    if kind not in FAMILY_KINDS:
        raise InvalidArgumentError(
            f"unknown family {kind!r}; expected one of {sorted(FAMILY_KINDS)}"
        )
    fn, arity = FAMILY_KINDS[kind]
    params = tuple(params)
    if len(params) != arity:
        raise InvalidArgumentError(f"family {kind!r} takes {arity} size parameter(s)")
    return fn(*params)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, exactly once.

    Order: edge-mask order, where bit k of the mask is the k-th vertex
    pair in combinations(range(n), 2) order.  Hard cap n <= 7: there are
    2^(n(n-1)/2) graphs.
    """
    if n < 0:
        raise InvalidArgumentError("n must be >= 0")
    if n > LABELED_ENUMERATION_CAP:
        raise InvalidArgumentError(
            f"labeled enumeration is capped at n <= {LABELED_ENUMERATION_CAP} (got {n})"
        )
    pairs = list(combinations(range(n), 2))
    for emask in range(1 << len(pairs)):
        yield Graph(n, (pairs[k] for k in bits(emask)))


def random_graph(n: int, p: float, rng: Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng`` (deterministic given its state)."""
    if n < 0:
        raise InvalidArgumentError("n must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError("edge probability must be in [0, 1]")
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_tree(n: int, rng: Random) -> Graph:
    """Uniform random labeled tree on n vertices via a Prufer sequence."""
    if n < 0:
        raise InvalidArgumentError("n must be >= 0")
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, [(0, 1)])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in prufer:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            # keep the leaf pool sorted so the construction is deterministic
            lo, hi = 0, len(leaves)
            while lo < hi:
                mid = (lo + hi) // 2
                if leaves[mid] < v:
                    lo = mid + 1
                else:
                    hi = mid
            leaves.insert(lo, v)
    edges.append((leaves[0], leaves[1]))
    return Graph(n, edges)
