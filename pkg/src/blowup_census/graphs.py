"""Simple graphs with packed bit-row adjacency, compositions, and nested blow-ups.

The composition G[H] replaces every vertex of G by a copy of H and joins all
vertices across two copies whenever the originals were adjacent.  Iterating
this with H = G yields the nested blow-up hierarchy G_0 = G, G_N = G[G_{N-1}].
Vertices use block-major indexing: the copy of G_{N-1} sitting over base
vertex b (a "blob") occupies the contiguous id interval
[b * |V(G_{N-1})|, (b+1) * |V(G_{N-1})|), and vertex (b, x) gets id
b * |V(G_{N-1})| + x.  Any consistent labeling gives the same induced-subgraph
counts, so this one is fixed as the canonical contract.

Adjacency rows are plain Python ints used as bitsets, which keeps all set
algebra exact and makes row intersection a single AND.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "DEFAULT_VERTEX_CAP",
    "BlowupSpec",
    "Family",
    "Graph",
    "GraphFormatError",
    "NonEdge",
    "VertexCapExceeded",
    "blob_of",
    "complete_graph",
    "compose",
    "cycle_graph",
    "empty_graph",
    "nested_blowup",
    "non_edges",
    "read_edge_list",
    "relabel",
    "theta_222",
    "write_edge_list",
]

# Guard against accidentally requesting a blow-up level whose adjacency would
# not fit in memory; CLI flag --vertex-cap overrides.
DEFAULT_VERTEX_CAP = 1 << 20


class GraphFormatError(ValueError):
    """Malformed edge-list text."""


class VertexCapExceeded(RuntimeError):
    """A construction would exceed the configured vertex cap."""


class NonEdge(NamedTuple):
    """Unordered non-adjacent pair, stored with u < v."""

    u: int
    v: int


def _bits(x: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, repr=False)
class Graph:
    """Immutable simple graph on vertex ids 0..n-1.

    ``rows[u]`` has bit v set iff {u, v} is an edge.  Construction validates
    the representation invariants (no self-loops, symmetry, no bits beyond
    the vertex range), so every live Graph is well-formed and safe to share
    across threads.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not isinstance(self.rows, tuple):
            object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        upper = 0
        total_bits = 0
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} has bits outside the vertex range")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            total_bits += row.bit_count()
            hi = row >> (u + 1)
            upper += hi.bit_count()
            for off in _bits(hi):
                v = u + 1 + off
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")
        # Every upper-triangle bit has a verified mirror; equality of the
        # total popcount rules out unmatched lower-triangle bits.
        if total_bits != 2 * upper:
            raise ValueError("asymmetric adjacency (unmatched lower-triangle bit)")
        object.__setattr__(self, "_edge_count", upper)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex pair ({u}, {v}) out of range")
        return bool((self.rows[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.rows))

    @property
    def edge_count(self) -> int:
        return self._edge_count  # type: ignore[attr-defined]

    @property
    def non_edge_count(self) -> int:
        return comb(self.n, 2) - self.edge_count

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, ascending."""
        for u in range(self.n):
            for off in _bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + off

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


# ---------------------------------------------------------------------------
# Base graphs
# ---------------------------------------------------------------------------


def cycle_graph(k: int) -> Graph:
    """The k-cycle 0-1-...-(k-1)-0."""
    if k < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def theta_222() -> Graph:
    """Two hubs joined by three internally disjoint length-2 paths (= K_{2,3}).

    Canonical labeling: hubs 0 and 4, path midpoints 1, 2, 3.
    """
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# ---------------------------------------------------------------------------
# Composition and nested blow-up
# ---------------------------------------------------------------------------


def compose(g: Graph, h: Graph) -> Graph:
    """The composition (lexicographic product) g[h].

    Vertex (i, x) gets id i * |V(h)| + x.  Within copy i the edges are those
    of h; between copies i != j every pair is joined iff {i, j} is an edge
    of g.
    """
    if g.n == 0 or h.n == 0:
        raise ValueError("compose requires non-empty graphs")
    nh = h.n
    block = (1 << nh) - 1
    cross = []
    for i in range(g.n):
        mask = 0
        for j in _bits(g.rows[i]):
            mask |= block << (j * nh)
        cross.append(mask)
    rows = []
    for i in range(g.n):
        shift = i * nh
        mask = cross[i]
        for x in range(nh):
            rows.append((h.rows[x] << shift) | mask)
    return Graph(g.n * nh, tuple(rows))


class Family(str, Enum):
    """Named base-graph families for blow-up hierarchies."""

    C4 = "c4"
    THETA222 = "theta222"
    CUSTOM = "custom"


@lru_cache(maxsize=None)
def _named_base(family: Family) -> Graph:
    if family is Family.C4:
        return cycle_graph(4)
    if family is Family.THETA222:
        return theta_222()
    raise ValueError("custom family requires an explicit base graph")


@dataclass(frozen=True)
class BlowupSpec:
    """Names one graph in a nested blow-up hierarchy: base family plus level.

    Level N of an n-vertex base has n^N vertices per blob and n^(N+1) total.
    """

    family: Family
    level: int
    base: Graph | None = None

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError("blow-up level must be nonnegative")
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if self.base is None:
            object.__setattr__(self, "base", _named_base(family))
        elif family is not Family.CUSTOM and self.base != _named_base(family):
            raise ValueError(f"family {family.value} has a fixed canonical base graph")
        if self.base.n == 0:
            raise ValueError("base graph must be non-empty")

    @property
    def base_order(self) -> int:
        return self.base.n

    @property
    def blob_order(self) -> int:
        return self.base.n**self.level

    @property
    def total_order(self) -> int:
        return self.base.n ** (self.level + 1)


def nested_blowup(spec: BlowupSpec, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Build G_N for the given spec: G_0 = base, G_N = base[G_{N-1}]."""
    if spec.total_order > vertex_cap:
        raise VertexCapExceeded(
            f"level {spec.level} of the {spec.family.value} family has "
            f"{spec.total_order} vertices, above the cap of {vertex_cap}; "
            "raise --vertex-cap to proceed"
        )
    g = spec.base
    for _ in range(spec.level):
        g = compose(spec.base, g)
    return g


def blob_of(v: int, spec: BlowupSpec) -> int:
    """Index of the blob (base vertex) whose copy contains vertex v."""
    if not 0 <= v < spec.total_order:
        raise IndexError(f"vertex {v} out of range for order {spec.total_order}")
    return v // spec.blob_order


# ---------------------------------------------------------------------------
# Non-edges
# ---------------------------------------------------------------------------


def non_edges(g: Graph) -> Iterator[NonEdge]:
    """All non-adjacent pairs (u, v) with u < v, ascending."""
    full = (1 << g.n) - 1
    for u in range(g.n):
        above = (full >> (u + 1)) << (u + 1)
        for v in _bits(above & ~g.rows[u]):
            yield NonEdge(u, v)


# ---------------------------------------------------------------------------
# Relabeling (test plumbing for isomorphism-invariance checks)
# ---------------------------------------------------------------------------


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply a vertex permutation: vertex v of g becomes perm[v]."""
    mapping = list(perm)
    if sorted(mapping) != list(range(g.n)):
        raise ValueError("relabeling must be a permutation of the vertex ids")
    rows = [0] * g.n
    for u, v in g.edges():
        pu, pv = mapping[u], mapping[v]
        rows[pu] |= 1 << pv
        rows[pv] |= 1 << pu
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------
#
# First line: vertex count n.  Each following non-empty line: "u v" with
# 0 <= u < v < n, ASCII decimal, single space.  Lines starting with '#' are
# comments.  Writing emits edges in ascending (u, v) order.


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count expected, got {line!r}")
            if n < 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise GraphFormatError(f"line {lineno}: edges must satisfy u < v, got {u} {v}")
        if not 0 <= u < n or not v < n:
            raise GraphFormatError(f"line {lineno}: vertex id out of range for n={n}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("empty edge-list text: vertex count line missing")
    return Graph.from_edges(n, edges)
